#pragma once

#include <cstdint>

#include "psh/corpus.hpp"
#include "psh/distributor.hpp"
#include "psh/presheaf.hpp"

namespace psh::laws {

// canonical structural isos of Dist used by the core suite
DistIsoReport dist_unit_right(const Distributor& m, const SizeLimits& caps = {}); // M∘id ≅ M
DistIsoReport dist_unit_left(const Distributor& m, const SizeLimits& caps = {});  // id∘M ≅ M
DistIsoReport dist_assoc(const Distributor& l, const Distributor& n, const Distributor& m,
                         const SizeLimits& caps = {}); // (L∘N)∘M ≅ L∘(N∘M)

IsoReport tensor_unit_iso(const Presheaf& r);                 // 1 ⊗ R ≅ R (along the unitor)
IsoReport tensor_assoc_iso(const Presheaf& r, const Presheaf& s, const Presheaf& t);

struct LawRecord {
    std::string suite;
    std::string law;
    std::string instance;
    std::string status; // "pass" or "fail"
    double millis = 0;
    std::string witness;
};

std::string to_json(const LawRecord& r);
bool all_pass(const std::vector<LawRecord>& records);
void sort_records(std::vector<LawRecord>& records);

struct SuiteOptions {
    bool full = false;
    SizeLimits caps;
    std::uint64_t seed = 20170126;
    int chain = 3; // matll default chain when run standalone
};

std::vector<LawRecord> run_core_suite(const SuiteOptions& opt);
std::vector<LawRecord> run_matll_suite(const SuiteOptions& opt);
std::vector<LawRecord> run_diagram_suite(const SuiteOptions& opt);

struct CounterexampleResult {
    bool found = false;
    double millis = 0;
    std::string description;
};

// searches the Boolean corner of the corpus (C = D = 1) for a strict instance
CounterexampleResult find_counterexample(char law, const SizeLimits& caps = {});

} // namespace psh::laws
