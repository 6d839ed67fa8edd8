#include "qflab/paperlab.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "qflab/reduction.hpp"

namespace qflab {

namespace {

enum class Outcome : unsigned char { pruned, failed, passed };

// One instance of the defining identity at a prime p coprime to 2dL: there
// n1 = 1 and mu_p = 1, so the full check compares the same two numbers at n = p.
bool fails_at_prime(const QuadForm& form, i64 p)
{
    const BigInt expected = represent_count(form, 1) * h_factor(form.discriminant(), p, 1, 4);
    return expected != represent_count(form, p * p);
}

std::optional<i64> prune_prime(i64 d, const SearchConfig& cfg)
{
    if (cfg.filter_mod3 && d % 3 != 0)
        return 3;
    if (cfg.filter_mod5 && d % 3 == 0 && d % 5 != 0)
        return 5;
    if (cfg.filter_good_prime && d % 105 == 0) {
        i64 p = 11;
        while (d % p == 0 || !is_prime(p))
            p += 2;
        return p;
    }
    return std::nullopt;
}

Outcome examine(const std::array<i64, 4>& diag, const SearchConfig& cfg)
{
    const QuadForm form = QuadForm::diagonal({diag[0], diag[1], diag[2], diag[3]});
    if (const auto p = prune_prime(form.discriminant(), cfg); p && *p <= cfg.bound && fails_at_prime(form, *p))
        return Outcome::pruned;
    return is_strongly_s_regular(form, cfg.bound).pass ? Outcome::passed : Outcome::failed;
}

} // namespace

SearchResult search_diagonal(const SearchConfig& cfg, const std::function<void(i64, i64)>& progress)
{
    if (cfg.c_max < 1)
        throw std::invalid_argument("c_max must be positive");
    if (cfg.bound < 1)
        throw std::invalid_argument("bound must be positive");

    std::vector<std::array<i64, 4>> candidates;
    for (i64 a = 1; a <= cfg.c_max; ++a)
        for (i64 b = a; b <= cfg.c_max; ++b)
            for (i64 c = b; c <= cfg.c_max; ++c)
                candidates.push_back({1, a, b, c});
    const i64 total = static_cast<i64>(candidates.size());

    std::vector<Outcome> outcomes(candidates.size());
    std::atomic<std::size_t> next{0};
    std::atomic<i64> done{0};
    std::mutex progress_mutex;
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < candidates.size(); i = next++) {
                outcomes[i] = examine(candidates[i], cfg);
                const i64 finished = ++done;
                if (progress && (finished % 256 == 0 || finished == total)) {
                    std::lock_guard lock(progress_mutex);
                    progress(finished, total);
                }
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
            next = candidates.size();
        }
    };

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, candidates.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);

    SearchResult res;
    res.config = cfg;
    res.examined = total;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (outcomes[i] == Outcome::pruned)
            ++res.pruned;
        if (outcomes[i] != Outcome::passed)
            continue;
        res.survivors.push_back(candidates[i]);
        const QuadForm form = QuadForm::diagonal({candidates[i].begin(), candidates[i].end()});
        const bool seen = std::any_of(res.representatives.begin(), res.representatives.end(), [&](const auto& r) {
            return is_isometric(form, QuadForm::diagonal({r.begin(), r.end()}));
        });
        if (!seen)
            res.representatives.push_back(candidates[i]);
    }
    return res;
}

} // namespace qflab
