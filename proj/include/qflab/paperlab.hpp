#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qflab/eta.hpp"
#include "qflab/lattice_data.hpp"
#include "qflab/regularity.hpp"

namespace qflab {

enum class OutputFormat { text, json, csv };

OutputFormat parse_output_format(const std::string& name);

/// Disk cache of theta coefficient vectors, keyed by a hash of the Minkowski
/// reduced form. Files hold {formHash, form, prec, checksum, coeffs}; writes go
/// to a temporary file that is then renamed into place.
class ThetaCache {
public:
    using Warn = std::function<void(const std::string&)>;

    explicit ThetaCache(std::filesystem::path dir, Warn warn = {});

    /// [r(0), ..., r(prec)], loaded (and truncated) when a stored vector is long
    /// enough, computed and stored otherwise. Corrupt files are recomputed.
    std::vector<i64> theta(const QuadForm& form, i64 prec);
    ThetaSource source();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const QuadForm& form) const;

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

    /// QFLAB_CACHE if set, else `flag` (may be empty: no cache).
    static std::optional<std::filesystem::path> resolve_dir(const std::string& flag);

private:
    std::filesystem::path dir_;
    Warn warn_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

std::string form_hash(const QuadForm& form);
std::string coefficient_checksum(const std::vector<i64>& coeffs);

struct ClassificationRow {
    ClassifiedForm entry;
    RegularityReport report;
    bool matches() const { return report.pass == entry.expected_regular; }
};

struct ClassificationReport {
    i64 bound = 0;
    std::vector<ClassificationRow> rows;
    bool pass() const;
};

/// Checks every bundled diagonal form; expected-regular ones must pass, the
/// others must fail.
ClassificationReport run_classification(i64 bound, ThetaSource source = {});

struct SturmComparison {
    i64 coefficients = 0; // 1..coefficients compared
    bool pass = false;
    std::optional<i64> first_mismatch;
};

struct GenusIdentityRanges {
    i64 l1 = 500;     // r(4n), r(4n+1)
    i64 l2 = 50;      // r(9n^2)
    i64 l3 = 30;      // r(25n^2)
    i64 linear = 500; // r(n) for n == 1, 4 mod 5
};

struct GenusIdentitiesReport {
    std::vector<IdentityReport> families;
    SturmComparison sturm;
    bool pass() const;
};

/// All identities of the three bundled genus pairs, plus the comparison of
/// (theta_L3 - theta_L3')/2 with F1 + F2 - 4 F3 up to the Sturm bound.
GenusIdentitiesReport run_genus_identities(const GenusIdentityRanges& ranges);

SturmComparison compare_level120_combination(const QuadForm& a, const QuadForm& b);

struct QuotientCheck {
    int index = 0;
    EtaQuotient quotient;
    bool prefix_matches = false;
    std::optional<i64> sum_mismatch;    // first n <= sum_range with A_i(n) != coefficient
    std::optional<i64> vanishing_failure; // first n == 1, 4 mod 5 with nonzero coefficient
    NewmanReport newman;
    bool character_matches = false;     // ((-1)^k s / m) == (60 / m) for m coprime to 120
    std::vector<CuspOrder> cusps;
    bool pass() const;
};

struct EtaQuotientReport {
    i64 prec = 0;
    i64 sum_range = 60;
    std::vector<QuotientCheck> quotients;
    /// n <= sum_range where the b-weighted A3 sum differs from the product.
    std::vector<i64> b_weighted_a3_mismatches;
    bool pass() const;
};

EtaQuotientReport run_eta_quotient_checks(i64 prec);

struct SearchConfig {
    i64 c_max = 9;
    i64 bound = 50;
    bool filter_good_prime = true; // 105 | dL: smallest odd prime p !| dL
    bool filter_mod3 = true;       // 3 !| dL: n = 3
    bool filter_mod5 = true;       // 3 | dL, 5 !| dL: n = 5
    unsigned threads = 0;          // 0: hardware concurrency
};

struct SearchResult {
    SearchConfig config;
    i64 examined = 0;
    i64 pruned = 0;
    std::vector<std::array<i64, 4>> survivors;       // <1,a,b,c> in lexicographic order
    std::vector<std::array<i64, 4>> representatives; // survivors up to isometry
};

/// Enumerates <1,a,b,c>, 1 <= a <= b <= c <= c_max, and keeps the forms that
/// pass the strong s-regularity check to `bound`. Deterministic for any thread count.
SearchResult search_diagonal(const SearchConfig& cfg,
    const std::function<void(i64 done, i64 total)>& progress = {});

std::string render(const ClassificationReport& r, OutputFormat f);
std::string render(const GenusIdentitiesReport& r, OutputFormat f);
std::string render(const EtaQuotientReport& r, OutputFormat f);
std::string render(const SearchResult& r, OutputFormat f);
std::string render(const RegularityReport& r, OutputFormat f);

} // namespace qflab
