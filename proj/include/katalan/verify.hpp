#pragma once

#include <random>

#include "katalan/cores.hpp"

namespace katalan {

struct SweepConfig {
    int max_ell = 4;
    int max_k = 3;
    int max_n = 2;  // operator power in thm3.18 / cor3.21 sweeps
    int degree_cap = 40;
    int random_instances = 200;
    unsigned long long rng_seed = 1;
    int parallelism = 1;
    bool strict_length = false;

    void validate() const;
};

struct SweepOutcome {
    std::string id;
    long long instances = 0;
    long long passes = 0;
    long long failures = 0;
    std::string first_failure;
    double seconds = 0.0;

    bool ok() const { return failures == 0; }
    void tally(bool pass, const std::string& description);
    void record(const IdentityRecord& r);  // skips non-applicable records
    std::string summary() const;
};

const std::vector<std::string>& verify_ids();
bool is_verify_id(const std::string& id);

// Runs the named sweep; throws std::invalid_argument for an unknown id.
SweepOutcome run_verify(const std::string& id, const SweepConfig& cfg);

// Zero-padded members of P_ell^k, ordered lexicographically.
std::vector<Vec> all_bounded_partitions(int ell, int k);

// Deterministic instance generators shared by the harness and the tests.
RootIdeal random_root_ideal(std::mt19937_64& rng, int ell);
IndexMultiset random_multiset(std::mt19937_64& rng, int ell, int max_mult = 2);
Vec random_gamma(std::mt19937_64& rng, int ell, int lo, int hi, int max_pos_degree);
KatalanTerm random_term(std::mt19937_64& rng, int ell, int max_pos_degree = 6);

// Hypothesis-satisfying Mirror Lemma instances, derived from straightening
// classifications plus constrained randomization of gamma and the multiset.
struct MirrorInstance {
    KatalanTerm term;
    int y;
    int z;
};
std::vector<MirrorInstance> generate_mirror_28_instances(std::mt19937_64& rng, int want);
std::vector<MirrorInstance> generate_mirror_29_instances(std::mt19937_64& rng, int want);

}  // namespace katalan
