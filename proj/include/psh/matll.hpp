#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "psh/finset.hpp"

namespace psh::mv {

// A finite *-autonomous poset given by full operation tables over element
// indices 0..n-1 in increasing order.
struct StarAutPoset {
    std::string name;
    std::vector<std::string> labels; // per element, in order
    int n = 0;
    std::vector<std::vector<int>> tensor_tab;
    std::vector<std::vector<int>> par_tab;
    std::vector<int> neg_tab;
    int one = 0; // ⊗-unit
    int bot = 0; // ⅋-unit

    int tensor(int x, int y) const { return tensor_tab[x][y]; }
    int par(int x, int y) const { return par_tab[x][y]; }
    int neg(int x) const { return neg_tab[x]; }
    int meet(int x, int y) const { return x < y ? x : y; }
    int join(int x, int y) const { return x < y ? y : x; }
    bool leq(int x, int y) const { return x <= y; }
    const std::string& label(int x) const { return labels[x]; }
    int index_of(const std::string& label) const;
};

std::vector<std::string> validate(const StarAutPoset& v);

// the Łukasiewicz chain {0, 1/(n-1), ..., 1}
StarAutPoset mv_chain(int n);

// A V-valued matrix M : A ⇸ B over finite index sets; entries keyed (b,a).
struct MVMatrix {
    std::string name;
    FinSet src; // A
    FinSet tgt; // B
    std::map<std::pair<std::string, std::string>, int> entries;

    int at(const std::string& b, const std::string& a) const;
};

std::vector<std::string> validate(const MVMatrix& m, const StarAutPoset& v);

// N∘M = ⊕_b N(c,b)⊗M(b,a)
MVMatrix mat_compose_plus(const StarAutPoset& v, const MVMatrix& n, const MVMatrix& m);
// N⋄M = &_b N(c,b)⅋M(b,a)
MVMatrix mat_compose_minus(const StarAutPoset& v, const MVMatrix& n, const MVMatrix& m);

MVMatrix mat_identity(const StarAutPoset& v, const FinSet& a);
MVMatrix mat_dual(const StarAutPoset& v, const MVMatrix& m); // (a,b) ↦ neg(M(b,a))

// vectors are matrices 1 ⇸ A over the singleton index set
MVMatrix mat_vector(const StarAutPoset& v, const FinSet& a, const std::map<std::string, int>& vals);

// ∃_M R = b ↦ ⊕_a M(b,a)⊗R_a,  ∀_M S = a ↦ &_b M*(a,b)⅋S_b
MVMatrix mat_exists(const StarAutPoset& v, const MVMatrix& m, const MVMatrix& r);
MVMatrix mat_forall(const StarAutPoset& v, const MVMatrix& m, const MVMatrix& s);

bool mat_leq(const MVMatrix& a, const MVMatrix& b);
bool mat_eq(const MVMatrix& a, const MVMatrix& b);

// ∃_M R ≤ S  ⇔  R ≤ ∀_M S on given instances
bool mat_adjunction_holds(const StarAutPoset& v, const MVMatrix& m, const MVMatrix& r,
                          const MVMatrix& s);

struct MatLawInstance {
    std::string law;      // "a".."f"
    bool holds = false;   // equality for a-d, entrywise ≤ for e,f
    bool strict = false;  // some entry strictly below (for e,f)
    std::string witness;  // entry-level description of a strict/failing site
};

struct MatLawBoxReport {
    int chain = 0;
    std::size_t instances = 0;
    std::map<std::string, std::size_t> checked;  // per law
    std::map<std::string, std::size_t> failures; // per law (equality laws)
    std::map<std::string, MatLawInstance> strict_witness; // first strict site for e,f
    bool ok() const;
};

// sweeps laws (a)-(f) over seeded random matrices with shapes up to max_dim
MatLawBoxReport mat_law_box(const StarAutPoset& v, int max_dim, std::size_t samples,
                            std::uint64_t seed);

} // namespace psh::mv
