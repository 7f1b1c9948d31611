#include "psh/matll.hpp"

#include <stdexcept>

namespace psh::mv {

int StarAutPoset::index_of(const std::string& label) const {
    for (int i = 0; i < n; ++i)
        if (labels[i] == label) return i;
    throw std::out_of_range("chain " + name + ": no element '" + label + "'");
}

std::vector<std::string> validate(const StarAutPoset& v) {
    std::vector<std::string> out;
    auto lbl = [&](int x) { return v.label(x); };
    for (int x = 0; x < v.n; ++x) {
        if (v.neg(v.neg(x)) != x) out.push_back("neg not involutive at " + lbl(x));
        if (v.tensor(x, v.one) != x) out.push_back("⊗-unit fails at " + lbl(x));
        if (v.par(x, v.bot) != x) out.push_back("⅋-unit fails at " + lbl(x));
        for (int y = 0; y < v.n; ++y) {
            if (v.tensor(x, y) != v.tensor(y, x))
                out.push_back("⊗ not commutative at (" + lbl(x) + "," + lbl(y) + ")");
            if (v.par(x, y) != v.neg(v.tensor(v.neg(x), v.neg(y))))
                out.push_back("⅋ is not the De Morgan dual at (" + lbl(x) + "," + lbl(y) + ")");
            for (int z = 0; z < v.n; ++z) {
                if (v.tensor(v.tensor(x, y), z) != v.tensor(x, v.tensor(y, z)))
                    out.push_back("⊗ not associative at (" + lbl(x) + "," + lbl(y) + "," + lbl(z) +
                                  ")");
                bool left = v.leq(v.tensor(x, y), z);
                bool right = v.leq(x, v.par(v.neg(y), z));
                if (left != right)
                    out.push_back("residuation fails at (" + lbl(x) + "," + lbl(y) + "," + lbl(z) +
                                  ")");
            }
        }
    }
    if (v.neg(v.one) != v.bot) out.push_back("neg(1) is not ⊥");
    return out;
}

StarAutPoset mv_chain(int n) {
    if (n < 2) throw std::invalid_argument("mv_chain: need n >= 2");
    StarAutPoset v;
    v.name = "L" + std::to_string(n);
    v.n = n;
    for (int k = 0; k < n; ++k) {
        if (k == 0)
            v.labels.push_back("0");
        else if (k == n - 1)
            v.labels.push_back("1");
        else
            v.labels.push_back(std::to_string(k) + "/" + std::to_string(n - 1));
    }
    v.tensor_tab.assign(n, std::vector<int>(n, 0));
    v.par_tab.assign(n, std::vector<int>(n, 0));
    v.neg_tab.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        v.neg_tab[x] = n - 1 - x;
        for (int y = 0; y < n; ++y) {
            v.tensor_tab[x][y] = std::max(0, x + y - (n - 1));
            v.par_tab[x][y] = std::min(n - 1, x + y);
        }
    }
    v.one = n - 1;
    v.bot = 0;
    return v;
}

int MVMatrix::at(const std::string& b, const std::string& a) const {
    auto it = entries.find({b, a});
    if (it == entries.end())
        throw std::out_of_range("matrix " + name + ": no entry (" + b + "," + a + ")");
    return it->second;
}

std::vector<std::string> validate(const MVMatrix& m, const StarAutPoset& v) {
    std::vector<std::string> out;
    for (const auto& b : m.tgt.elements)
        for (const auto& a : m.src.elements) {
            auto it = m.entries.find({b, a});
            if (it == m.entries.end())
                out.push_back("missing entry (" + b + "," + a + ")");
            else if (it->second < 0 || it->second >= v.n)
                out.push_back("entry (" + b + "," + a + ") outside the chain");
        }
    return out;
}

MVMatrix mat_compose_plus(const StarAutPoset& v, const MVMatrix& n, const MVMatrix& m) {
    if (!(m.tgt == n.src)) throw std::invalid_argument("mat_compose_plus: shape mismatch");
    MVMatrix out;
    out.name = n.name + "∘" + m.name;
    out.src = m.src;
    out.tgt = n.tgt;
    for (const auto& c : n.tgt.elements)
        for (const auto& a : m.src.elements) {
            int acc = v.bot; // empty join is the bottom element
            for (const auto& b : m.tgt.elements)
                acc = v.join(acc, v.tensor(n.at(c, b), m.at(b, a)));
            out.entries[{c, a}] = acc;
        }
    return out;
}

MVMatrix mat_compose_minus(const StarAutPoset& v, const MVMatrix& n, const MVMatrix& m) {
    if (!(m.tgt == n.src)) throw std::invalid_argument("mat_compose_minus: shape mismatch");
    MVMatrix out;
    out.name = n.name + "⋄" + m.name;
    out.src = m.src;
    out.tgt = n.tgt;
    for (const auto& c : n.tgt.elements)
        for (const auto& a : m.src.elements) {
            int acc = v.one; // empty meet is the top element
            for (const auto& b : m.tgt.elements)
                acc = v.meet(acc, v.par(n.at(c, b), m.at(b, a)));
            out.entries[{c, a}] = acc;
        }
    return out;
}

MVMatrix mat_identity(const StarAutPoset& v, const FinSet& a) {
    MVMatrix out;
    out.name = "id_" + a.name;
    out.src = a;
    out.tgt = a;
    for (const auto& b : a.elements)
        for (const auto& x : a.elements) out.entries[{b, x}] = (b == x) ? v.one : 0;
    return out;
}

MVMatrix mat_dual(const StarAutPoset& v, const MVMatrix& m) {
    MVMatrix out;
    out.name = m.name + "*";
    out.src = m.tgt;
    out.tgt = m.src;
    for (const auto& [key, x] : m.entries) out.entries[{key.second, key.first}] = v.neg(x);
    return out;
}

MVMatrix mat_vector(const StarAutPoset& v, const FinSet& a, const std::map<std::string, int>& vals) {
    (void)v;
    MVMatrix out;
    out.name = "vec";
    out.src = FinSet("1", {"*"});
    out.tgt = a;
    for (const auto& x : a.elements) out.entries[{x, "*"}] = vals.at(x);
    return out;
}

MVMatrix mat_exists(const StarAutPoset& v, const MVMatrix& m, const MVMatrix& r) {
    // R is a vector over m.src; the result is a vector over m.tgt
    if (!(r.tgt == m.src)) throw std::invalid_argument("mat_exists: shape mismatch");
    MVMatrix out;
    out.name = "∃_" + m.name + "(" + r.name + ")";
    out.src = r.src;
    out.tgt = m.tgt;
    for (const auto& b : m.tgt.elements) {
        int acc = v.bot;
        for (const auto& a : m.src.elements)
            acc = v.join(acc, v.tensor(m.at(b, a), r.at(a, "*")));
        out.entries[{b, "*"}] = acc;
    }
    return out;
}

MVMatrix mat_forall(const StarAutPoset& v, const MVMatrix& m, const MVMatrix& s) {
    // S is a vector over m.tgt; the result is a vector over m.src
    if (!(s.tgt == m.tgt)) throw std::invalid_argument("mat_forall: shape mismatch");
    MVMatrix out;
    out.name = "∀_" + m.name + "(" + s.name + ")";
    out.src = s.src;
    out.tgt = m.src;
    for (const auto& a : m.src.elements) {
        int acc = v.one;
        for (const auto& b : m.tgt.elements)
            acc = v.meet(acc, v.par(v.neg(m.at(b, a)), s.at(b, "*")));
        out.entries[{a, "*"}] = acc;
    }
    return out;
}

bool mat_leq(const MVMatrix& a, const MVMatrix& b) {
    for (const auto& [key, x] : a.entries)
        if (x > b.entries.at(key)) return false;
    return true;
}

bool mat_eq(const MVMatrix& a, const MVMatrix& b) {
    return a.src == b.src && a.tgt == b.tgt && a.entries == b.entries;
}

bool mat_adjunction_holds(const StarAutPoset& v, const MVMatrix& m, const MVMatrix& r,
                          const MVMatrix& s) {
    return mat_leq(mat_exists(v, m, r), s) == mat_leq(r, mat_forall(v, m, s));
}

bool MatLawBoxReport::ok() const {
    for (const auto& [law, fails] : failures)
        if (fails > 0) return false;
    return strict_witness.count("e") > 0 && strict_witness.count("f") > 0;
}

namespace {

FinSet index_set(const std::string& stem, int k) {
    std::vector<std::string> e;
    for (int i = 0; i < k; ++i) e.push_back(stem + std::to_string(i));
    return FinSet(stem, std::move(e));
}

MVMatrix random_matrix(const StarAutPoset& v, const FinSet& src, const FinSet& tgt,
                       std::mt19937_64& rng) {
    MVMatrix m;
    m.name = "rand";
    m.src = src;
    m.tgt = tgt;
    std::uniform_int_distribution<int> d(0, v.n - 1);
    for (const auto& b : tgt.elements)
        for (const auto& a : src.elements) m.entries[{b, a}] = d(rng);
    return m;
}

} // namespace

MatLawBoxReport mat_law_box(const StarAutPoset& v, int max_dim, std::size_t samples,
                            std::uint64_t seed) {
    MatLawBoxReport rep;
    rep.chain = v.n;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, max_dim);

    for (std::size_t i = 0; i < samples; ++i) {
        FinSet A = index_set("a", dim(rng));
        FinSet B = index_set("b", dim(rng));
        FinSet C = index_set("c", dim(rng));
        FinSet D = index_set("d", dim(rng));
        MVMatrix R = random_matrix(v, FinSet("1", {"*"}), A, rng); // vector over A
        MVMatrix S = random_matrix(v, FinSet("1", {"*"}), B, rng); // vector over B
        MVMatrix Mca = random_matrix(v, A, C, rng); // M : A ⇸ C, entries (c,a)
        MVMatrix Mac = random_matrix(v, C, A, rng); // M : C ⇸ A, entries (a,c)
        MVMatrix Ndb = random_matrix(v, B, D, rng); // N : B ⇸ D, entries (d,b)
        MVMatrix Nbd = random_matrix(v, D, B, rng); // N : D ⇸ B, entries (b,d)
        ++rep.instances;

        // (a): ∀_M S entrywise: &_c (R_c... the box display, with M : C ⇸ A:
        // &_c (S'_c ⅋ M(a,c)) = neg(⊕_c negM(a,c) ⊗ negS'_c), S' a vector over C
        MVMatrix Sc = random_matrix(v, FinSet("1", {"*"}), C, rng);
        for (const auto& a : A.elements) {
            ++rep.checked["a"];
            int lhs = v.one, rhs_acc = v.bot;
            for (const auto& c : C.elements) lhs = v.meet(lhs, v.par(Sc.at(c, "*"), Mac.at(a, c)));
            for (const auto& c : C.elements)
                rhs_acc = v.join(rhs_acc, v.tensor(v.neg(Mac.at(a, c)), v.neg(Sc.at(c, "*"))));
            if (lhs != v.neg(rhs_acc)) ++rep.failures["a"];
        }

        // (b): the mirror-image dualization, arguments in the other order
        for (const auto& a : A.elements) {
            ++rep.checked["b"];
            int lhs = v.one, rhs_acc = v.bot;
            for (const auto& c : C.elements) lhs = v.meet(lhs, v.par(Mac.at(a, c), Sc.at(c, "*")));
            for (const auto& c : C.elements)
                rhs_acc = v.join(rhs_acc, v.tensor(v.neg(Sc.at(c, "*")), v.neg(Mac.at(a, c))));
            if (lhs != v.neg(rhs_acc)) ++rep.failures["b"];
        }

        // (c): (⊕_a M(c,a)⊗R_a) ⊗ (⊕_b N(d,b)⊗S_b) = ⊕_{a,b} M(c,a)⊗N(d,b)⊗R_a⊗S_b
        for (const auto& c : C.elements)
            for (const auto& d : D.elements) {
                ++rep.checked["c"];
                int ma = v.bot, nb = v.bot, joint = v.bot;
                for (const auto& a : A.elements)
                    ma = v.join(ma, v.tensor(Mca.at(c, a), R.at(a, "*")));
                for (const auto& b : B.elements)
                    nb = v.join(nb, v.tensor(Ndb.at(d, b), S.at(b, "*")));
                for (const auto& a : A.elements)
                    for (const auto& b : B.elements)
                        joint = v.join(joint, v.tensor(v.tensor(Mca.at(c, a), Ndb.at(d, b)),
                                                       v.tensor(R.at(a, "*"), S.at(b, "*"))));
                if (v.tensor(ma, nb) != joint) ++rep.failures["c"];
            }

        // (d): (&_a R_a⅋M(a,c)) ⅋ (&_b S_b⅋N(b,d)) = &_{a,b} R_a⅋S_b⅋M(a,c)⅋N(b,d)
        for (const auto& c : C.elements)
            for (const auto& d : D.elements) {
                ++rep.checked["d"];
                int ma = v.one, nb = v.one, joint = v.one;
                for (const auto& a : A.elements) ma = v.meet(ma, v.par(R.at(a, "*"), Mac.at(a, c)));
                for (const auto& b : B.elements) nb = v.meet(nb, v.par(S.at(b, "*"), Nbd.at(b, d)));
                for (const auto& a : A.elements)
                    for (const auto& b : B.elements)
                        joint = v.meet(joint, v.par(v.par(R.at(a, "*"), S.at(b, "*")),
                                                    v.par(Mac.at(a, c), Nbd.at(b, d))));
                if (v.par(ma, nb) != joint) ++rep.failures["d"];
            }

        // (e): ∀_M R ⊗ ∀_N S ≤ ∀_{M⊗N}(R⊗S); strict somewhere
        for (const auto& c : C.elements)
            for (const auto& d : D.elements) {
                ++rep.checked["e"];
                int fm = v.one, fn = v.one, joint = v.one;
                for (const auto& a : A.elements)
                    fm = v.meet(fm, v.par(v.neg(Mac.at(a, c)), R.at(a, "*")));
                for (const auto& b : B.elements)
                    fn = v.meet(fn, v.par(v.neg(Nbd.at(b, d)), S.at(b, "*")));
                for (const auto& a : A.elements)
                    for (const auto& b : B.elements)
                        joint = v.meet(joint,
                                       v.par(v.neg(v.tensor(Mac.at(a, c), Nbd.at(b, d))),
                                             v.tensor(R.at(a, "*"), S.at(b, "*"))));
                int lhs = v.tensor(fm, fn);
                if (!v.leq(lhs, joint)) ++rep.failures["e"];
                if (lhs < joint && !rep.strict_witness.count("e"))
                    rep.strict_witness["e"] =
                        MatLawInstance{"e", true, true,
                                       "at (" + c + "," + d + "): " + v.label(lhs) + " < " +
                                           v.label(joint) + " (sample " + std::to_string(i) + ")"};
            }

        // (f): ⊕_{a,b} N(d,b)⊗M(c,a)⊗(R_a⅋S_b) ≤ (⊕_a M(c,a)⊗R_a) ⅋ (⊕_b N(d,b)⊗S_b)
        for (const auto& c : C.elements)
            for (const auto& d : D.elements) {
                ++rep.checked["f"];
                int em = v.bot, en = v.bot, joint = v.bot;
                for (const auto& a : A.elements)
                    em = v.join(em, v.tensor(Mca.at(c, a), R.at(a, "*")));
                for (const auto& b : B.elements)
                    en = v.join(en, v.tensor(Ndb.at(d, b), S.at(b, "*")));
                for (const auto& a : A.elements)
                    for (const auto& b : B.elements)
                        joint = v.join(joint,
                                       v.tensor(v.tensor(Ndb.at(d, b), Mca.at(c, a)),
                                                v.par(R.at(a, "*"), S.at(b, "*"))));
                int rhs = v.par(em, en);
                if (!v.leq(joint, rhs)) ++rep.failures["f"];
                if (joint < rhs && !rep.strict_witness.count("f"))
                    rep.strict_witness["f"] =
                        MatLawInstance{"f", true, true,
                                       "at (" + c + "," + d + "): " + v.label(joint) + " < " +
                                           v.label(rhs) + " (sample " + std::to_string(i) + ")"};
            }
    }
    return rep;
}

} // namespace psh::mv
