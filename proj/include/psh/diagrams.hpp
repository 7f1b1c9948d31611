#pragma once

#include <memory>

#include "psh/monoidal.hpp"

namespace psh::diag {

// ---- category expressions (symbolic boundaries) ----

struct CatExpr;
using CatExprPtr = std::shared_ptr<const CatExpr>;

struct CatExpr {
    enum Kind { Name, Op, Prod } kind;
    std::string name;
    CatExprPtr a, b;
};

CatExprPtr cat_name(std::string n);
CatExprPtr cat_op(CatExprPtr x);
CatExprPtr cat_prod(CatExprPtr x, CatExprPtr y);
// push op down to names; op(op(X)) cancels
CatExprPtr normalize(const CatExprPtr& x);
bool equal(const CatExprPtr& x, const CatExprPtr& y); // after normalization
std::string to_string(const CatExprPtr& x);

// ---- distributor expressions ----

struct DistExpr;
using DistExprPtr = std::shared_ptr<const DistExpr>;

struct DistExpr {
    enum Kind { Name, Dual, Tensor, Eval, Coev, Id } kind;
    std::string name;
    DistExprPtr a, b;
    CatExprPtr x, y;
};

DistExprPtr dist_name(std::string n);
DistExprPtr dist_dual(DistExprPtr d);
DistExprPtr dist_tensor(DistExprPtr d, DistExprPtr e);
DistExprPtr dist_eval(CatExprPtr x, CatExprPtr y);
DistExprPtr dist_coev(CatExprPtr x, CatExprPtr y);
DistExprPtr dist_id(CatExprPtr x);
bool equal(const DistExprPtr& d, const DistExprPtr& e);
std::string to_string(const DistExprPtr& d);

// ---- diagram terms ----

struct DiagTerm;
using TermPtr = std::shared_ptr<const DiagTerm>;

struct DiagTerm {
    enum Kind { Atom, AtomCo, Tensor, Push, Dual, Codual, Owedge } kind;
    std::string name;  // Atom / AtomCo
    DistExprPtr dist;  // Push
    TermPtr a, b;
};

TermPtr atom(std::string name);
TermPtr atom_co(std::string name);
TermPtr tensor(TermPtr t, TermPtr u);
TermPtr push(DistExprPtr d, TermPtr t);
TermPtr dual(TermPtr t);
TermPtr codual(TermPtr t);
TermPtr owedge(TermPtr t_co, TermPtr t);
// R ⊸ S encoded as codual(owedge(dual(s), r))
TermPtr imp_term(TermPtr r, TermPtr s);

bool equal(const TermPtr& t, const TermPtr& u);
std::string to_string(const TermPtr& t);
TermPtr parse_term(const std::string& text);

// ---- typing ----

struct DiagSignature {
    std::map<std::string, std::string> atoms;   // presheaf name -> category name
    std::map<std::string, std::string> coatoms; // copresheaf name -> category name
    std::map<std::string, std::pair<std::string, std::string>> dists; // name -> (src, tgt)
};

struct Boundary {
    CatExprPtr cat;
    bool blue = true; // blue = p side, red = q side
};

struct TypeResult {
    bool ok = false;
    Boundary boundary;
    std::vector<std::string> violations;
};

TypeResult typecheck(const TermPtr& t, const DiagSignature& sig);
std::pair<CatExprPtr, CatExprPtr> dist_profile(const DistExprPtr& d, const DiagSignature& sig);

// ---- moves ----

enum class MoveKind { AnnulusInsert, AnnulusRemove, Distributivity, Coeval, Eval, Unit, Counit };

struct Move {
    MoveKind kind;
    std::vector<int> path; // child indices from the root
    bool backward = false; // only for iso moves
    DistExprPtr dist;      // unit move: the distributor pushed along
    TermPtr arg;           // coeval move: the tensored presheaf term
};

bool move_is_iso(MoveKind k);
std::string to_string(MoveKind k);

// applies the move; throws std::invalid_argument when the redex does not match
TermPtr apply_move(const TermPtr& t, const Move& m, const DiagSignature& sig);

// ---- semantics ----

struct DiagModel {
    std::map<std::string, Presheaf> presheaves;   // contravariant atoms
    std::map<std::string, CoPresheaf> copresheaves;
    std::map<std::string, Distributor> distributors;
    std::map<std::string, CatPtr> categories;

    DiagSignature signature() const;
};

CatPtr interpret_cat(const CatExprPtr& x, const DiagModel& model);
Distributor interpret_dist(const DistExprPtr& d, const DiagModel& model,
                           const SizeLimits& caps = {});
Presheaf interpret(const TermPtr& t, const DiagModel& model, const SizeLimits& caps = {});

struct SoundnessReport {
    bool natural = false; // the canonical map exists and is natural
    bool iso = false;     // and is bijective (expected only for iso moves)
    std::string direction;
    std::string failure;
};

SoundnessReport soundness_check(const TermPtr& t, const Move& m, const DiagModel& model,
                                const SizeLimits& caps = {});

// deterministic dot rendering; boxes are clusters, regions are coloured
std::string render(const TermPtr& t, const DiagSignature& sig);

} // namespace psh::diag
