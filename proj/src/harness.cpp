// SPDX-License-Identifier: Apache-2.0
#include "ag/harness.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <set>
#include <thread>

#include "ag/error.hpp"

namespace ag {

const char* to_string(ErrorMode mode) { return mode == ErrorMode::Random ? "R" : "N"; }

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over a mix of both inputs
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

gf::Elem random_elem(const gf::Field& F, std::mt19937_64& rng) {
    return gf::Elem{std::uint8_t(std::uniform_int_distribution<int>(0, F.size() - 1)(rng))};
}

gf::Elem random_nonzero(const gf::Field& F, std::mt19937_64& rng) {
    return gf::Elem{std::uint8_t(std::uniform_int_distribution<int>(1, F.size() - 1)(rng))};
}

int weight(const Word& w) {
    return int(std::count_if(w.begin(), w.end(), [](gf::Elem e) { return !e.is_zero(); }));
}

}  // namespace

std::vector<Word> low_weight_codewords(const Code& code, int samples, std::uint64_t seed, std::size_t keep) {
    const CodeContext& ctx = *code.ctx;
    const gf::Field& F = ctx.field();
    const auto n = std::size_t(ctx.n());
    std::vector<Word> gen;
    for (int s : code.gamma) gen.push_back(ctx.ev(ctx.ring().monomial(gf::kOne, s)));
    const std::size_t k = gen.size();

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    std::set<Word> best;
    int best_w = int(n) + 1;
    const int rounds = std::max<int>(1, int((std::size_t(samples) + k - 1) / k));
    for (int round = 0; round < rounds; ++round) {
        std::shuffle(cols.begin(), cols.end(), rng);
        std::vector<Word> m = gen;
        std::size_t rank = 0;
        for (std::size_t ci = 0; ci < n && rank < k; ++ci) {
            const std::size_t col = cols[ci];
            std::size_t piv = rank;
            while (piv < k && m[piv][col].is_zero()) ++piv;
            if (piv == k) continue;
            std::swap(m[piv], m[rank]);
            const gf::Elem inv = F.inv(m[rank][col]);
            for (auto& e : m[rank]) e = F.mul(e, inv);
            for (std::size_t r = 0; r < k; ++r) {
                if (r == rank || m[r][col].is_zero()) continue;
                const gf::Elem f = F.neg(m[r][col]);
                for (std::size_t c = 0; c < n; ++c) m[r][c] = F.add(m[r][c], F.mul(f, m[rank][c]));
            }
            ++rank;
        }
        for (const Word& row : m) {
            const int w = weight(row);
            if (w == 0 || w > best_w) continue;
            if (w < best_w) {
                best_w = w;
                best.clear();
            }
            if (best.size() < keep) best.insert(row);
        }
    }
    return {best.begin(), best.end()};
}

Word gen_error(const Code& code, ErrorMode mode, int tau, const std::vector<Word>& pool, std::mt19937_64& rng) {
    const CodeContext& ctx = *code.ctx;
    const gf::Field& F = ctx.field();
    const int n = ctx.n();
    Word e(static_cast<std::size_t>(n));
    if (mode == ErrorMode::Random) {
        std::vector<int> pos(static_cast<std::size_t>(n));
        std::iota(pos.begin(), pos.end(), 0);
        std::shuffle(pos.begin(), pos.end(), rng);
        for (int i = 0; i < tau; ++i) e[std::size_t(pos[std::size_t(i)])] = random_nonzero(F, rng);
        return e;
    }
    std::vector<const Word*> usable;
    for (const Word& w : pool)
        if (weight(w) >= tau) usable.push_back(&w);
    if (usable.empty())
        throw Error(ErrorKind::NearestUnavailable, "no low-weight codeword with at least " + std::to_string(tau) + " nonzeros");
    const Word& c = *usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
    const gf::Elem scale = random_nonzero(F, rng);
    std::vector<int> support;
    for (int i = 0; i < n; ++i)
        if (!c[std::size_t(i)].is_zero()) support.push_back(i);
    std::shuffle(support.begin(), support.end(), rng);
    for (int i = 0; i < tau; ++i) {
        const auto p = std::size_t(support[std::size_t(i)]);
        e[p] = F.mul(scale, c[p]);
    }
    return e;
}

TrialStats run_trials(const Code& code, const TrialConfig& cfg) {
    const CodeContext& ctx = *code.ctx;
    const gf::Field& F = ctx.field();
    const Decoder dec(code);
    std::vector<Word> pool;
    if (cfg.mode == ErrorMode::TowardNearest) pool = low_weight_codewords(code, 10000, cfg.seed);

    DecodeOptions opt;
    opt.tau = cfg.tau;
    opt.criterion = cfg.criterion;
    opt.check_invariants = cfg.check_invariants;
    opt.gap_elimination = cfg.gap_elimination;
    opt.iteration_cap = cfg.iteration_cap;

    std::vector<TrialRecord> records(static_cast<std::size_t>(std::max(cfg.trials, 0)));
    auto run_one = [&](std::size_t idx) {
        std::mt19937_64 rng(trial_seed(cfg.seed, idx));
        Message msg;
        for (int s : code.gamma) msg[s] = random_elem(F, rng);
        const Word cw = encode(code, msg);
        const Word e = gen_error(code, cfg.mode, cfg.tau, pool, rng);
        Word r = cw;
        for (std::size_t p = 0; p < r.size(); ++p) r[p] = F.add(r[p], e[p]);
        const DecodeResult res = dec.decode(r, opt);
        TrialRecord& rec = records[idx];
        rec.transmitted = cw;
        rec.received = r;
        rec.iterations = res.iterations;
        rec.cost = res.cost;
        for (const auto& entry : res.list) {
            rec.found.push_back(entry.codeword);
            rec.success = rec.success || entry.codeword == cw;
        }
        std::sort(rec.found.begin(), rec.found.end());
    };

    const int threads = std::max(1, std::min(cfg.threads, cfg.trials));
    if (threads == 1) {
        for (std::size_t i = 0; i < records.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> pool_threads;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool_threads.emplace_back([&, t] {
                try {
                    for (std::size_t i = std::size_t(t); i < records.size(); i += std::size_t(threads)) run_one(i);
                } catch (...) {
                    errors[std::size_t(t)] = std::current_exception();
                }
            });
        }
        for (auto& th : pool_threads) th.join();
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);
    }

    TrialStats st;
    st.curve_id = cfg.curve_id;
    st.gamma_size = code.dim();
    st.dag = code.dag;
    st.tau = cfg.tau;
    st.mode = cfg.mode;
    st.criterion = cfg.criterion;
    st.trials = cfg.trials;
    st.bound = iteration_bound(code, cfg.tau, cfg.criterion);
    for (const auto& rec : records) {
        st.avg_iter += double(rec.iterations);
        st.max_iter = std::max(st.max_iter, rec.iterations);
        st.avg_ops += double(rec.cost.bound);
        st.max_ops = std::max(st.max_ops, rec.cost.bound);
        st.avg_exec += double(rec.cost.ops());
        st.max_exec = std::max(st.max_exec, rec.cost.ops());
        st.avg_found += double(rec.found.size());
        st.max_found = std::max(st.max_found, rec.found.size());
        st.successes += rec.success;
    }
    if (st.trials > 0) {
        st.avg_iter /= st.trials;
        st.avg_ops /= st.trials;
        st.avg_exec /= st.trials;
        st.avg_found /= st.trials;
    }
    st.records = std::move(records);
    return st;
}

void write_stats_line(std::ostream& out, const TrialStats& s) {
    out << s.curve_id << ' ' << s.gamma_size << ' ' << s.dag << ' ' << s.tau << ' ' << to_string(s.mode) << ' '
        << int(s.criterion) << ' ' << s.bound << ' ' << std::fixed << std::setprecision(2) << s.avg_iter << ' '
        << s.max_iter << ' ' << s.avg_ops << ' ' << s.max_ops << ' ' << s.avg_found << ' ' << s.max_found << ' '
        << std::setprecision(4) << s.success_rate() << '\n';
    out.unsetf(std::ios::floatfield);
}

void write_stats_table_header(std::ostream& out) {
    out << std::left << std::setw(12) << "curve" << std::right << std::setw(4) << "#G" << std::setw(5) << "dAG"
        << std::setw(6) << "tau" << std::setw(6) << "crit" << std::setw(12) << "bound" << std::setw(11) << "avg_it"
        << std::setw(9) << "max_it" << std::setw(14) << "avg_ops" << std::setw(11) << "max_ops" << std::setw(14)
        << "avg_exec" << std::setw(11) << "max_exec" << std::setw(8) << "found" << std::setw(5) << "max" << std::setw(9)
        << "success" << '\n';
}

void write_stats_table_row(std::ostream& out, const TrialStats& s) {
    const std::string tau = std::to_string(s.tau) + to_string(s.mode);
    out << std::left << std::setw(12) << s.curve_id << std::right << std::setw(4) << s.gamma_size << std::setw(5)
        << s.dag << std::setw(6) << tau << std::setw(6) << int(s.criterion) << std::setw(12) << s.bound << std::fixed
        << std::setprecision(2) << std::setw(11) << s.avg_iter << std::setw(9) << s.max_iter << std::setw(14)
        << s.avg_ops << std::setw(11) << s.max_ops << std::setw(14) << s.avg_exec << std::setw(11) << s.max_exec
        << std::setw(8) << s.avg_found << std::setw(5) << s.max_found << std::setw(8) << std::setprecision(1)
        << 100.0 * s.success_rate() << "%\n";
    out.unsetf(std::ios::floatfield);
}

}  // namespace ag
