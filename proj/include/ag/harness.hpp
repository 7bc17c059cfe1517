// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "ag/decoder.hpp"

namespace ag {

enum class ErrorMode { Random, TowardNearest };

const char* to_string(ErrorMode mode);  // "R" / "N"

struct TrialConfig {
    std::string curve_id;
    int tau = 0;
    Criterion criterion = Criterion::Third;
    int trials = 50;
    ErrorMode mode = ErrorMode::Random;
    std::uint64_t seed = 1;
    int threads = 1;
    bool check_invariants = false;
    bool gap_elimination = true;
    std::uint64_t iteration_cap = 0;
};

struct TrialRecord {
    std::uint64_t iterations = 0;
    CostCounter cost;
    Word transmitted;
    Word received;
    std::vector<Word> found;  // codewords in the decoded list, sorted
    bool success = false;     // transmitted codeword in the list
};

struct TrialStats {
    std::string curve_id;
    int gamma_size = 0;
    int dag = 0;
    int tau = 0;
    ErrorMode mode = ErrorMode::Random;
    Criterion criterion = Criterion::Third;
    int trials = 0;
    std::uint64_t bound = 0;
    double avg_iter = 0;
    std::uint64_t max_iter = 0;
    double avg_ops = 0;  // cost-model tally, the quantity the published tables sum
    std::uint64_t max_ops = 0;
    double avg_exec = 0;  // executed field multiplications and divisions
    std::uint64_t max_exec = 0;
    double avg_found = 0;
    std::size_t max_found = 0;
    int successes = 0;
    std::vector<TrialRecord> records;

    double success_rate() const { return trials ? double(successes) / trials : 0.0; }
};

/// Low-weight nonzero codewords from random information sets: each sample
/// brings the generator matrix to systematic form on a random column
/// order and keeps the rows of least weight. Returns every codeword found
/// with the least weight seen (at most `keep`).
std::vector<Word> low_weight_codewords(const Code& code, int samples, std::uint64_t seed, std::size_t keep = 64);

/// Error word of weight tau. Random: uniform support and nonzero values.
/// TowardNearest: tau positions of the support of a low-weight codeword c'
/// from `pool`, carrying the values of c' (times a random nonzero scalar),
/// so the received word moves toward transmitted + c'. Throws
/// Error(NearestUnavailable) if no pool word has weight >= tau.
Word gen_error(const Code& code, ErrorMode mode, int tau, const std::vector<Word>& pool, std::mt19937_64& rng);

/// Seed of trial `index`, independent of thread scheduling.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Runs cfg.trials independent encode / corrupt / decode rounds. Propagates
/// Error(BudgetExceeded).
TrialStats run_trials(const Code& code, const TrialConfig& cfg);

/// `curve gammasize dag tau mode criterion bound avg_iter max_iter avg_ops max_ops avg_found max_found success_rate`
void write_stats_line(std::ostream& out, const TrialStats& s);
void write_stats_table_header(std::ostream& out);
void write_stats_table_row(std::ostream& out, const TrialStats& s);

}  // namespace ag
