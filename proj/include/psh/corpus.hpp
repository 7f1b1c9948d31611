#pragma once

#include <cstdint>
#include <random>

#include "psh/distributor.hpp"
#include "psh/functor.hpp"
#include "psh/presheaf.hpp"

namespace psh::corpus {

// the named base categories of the test corpus
CatPtr terminal();
CatPtr discrete2();
CatPtr walking_arrow();  // 0 --f--> 1
CatPtr cospan();         // 0 --u--> 2 <--v-- 1
CatPtr parallel_pair();  // 0 ==f,g==> 1
std::vector<std::pair<std::string, CatPtr>> named_categories();

// every category with at most max_obj objects and max_nonid non-identity
// morphisms whose composition table closes validly; canonical labels
std::vector<CatPtr> enumerate_categories(int max_obj, int max_nonid);

// exhaustive presheaves with value sizes <= max_val; deterministic stride
// selection when more than cap survive
std::vector<Presheaf> enumerate_presheaves(CatPtr base, int max_val, std::size_t cap,
                                           Variance variance = Variance::contra);

// all functors between two corpus categories, up to cap
std::vector<Functor> enumerate_functors(CatPtr src, CatPtr tgt, std::size_t cap);

// structured + rejection-sampled distributors with value sizes <= max_val
std::vector<Distributor> sample_distributors(CatPtr src, CatPtr tgt, int max_val,
                                             std::size_t count, std::uint64_t seed);

struct CorpusOptions {
    bool full = false;            // include the enumerated categories
    std::size_t presheaves_per_base = 6;
    std::size_t distributors_per_pair = 3;
    std::size_t pair_limit = 12;  // category pairs taking part in (M,R,S) sweeps
    std::uint64_t seed = 20170126;
};

struct Corpus {
    std::vector<CatPtr> bases;                       // all categories in play
    std::vector<std::pair<CatPtr, CatPtr>> pairs;    // for (M,R,S) instances
};

Corpus build_corpus(const CorpusOptions& opt);

} // namespace psh::corpus
