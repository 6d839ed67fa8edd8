#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qflab/paperlab.hpp"
#include "qflab/transforms.hpp"

using namespace qflab;
using nlohmann::json;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string form;
    std::string out = "text";
    std::string cache_dir;
    i64 bound = 0;
    i64 prec = 0;
    i64 level = 0;
    i64 weight = 2;
    std::string quotient;
    std::string target;
    i64 c_max = 121;
    unsigned threads = 0;
    bool no_good_prime = false;
    bool no_mod3 = false;
    bool no_mod5 = false;
    bool progress = false;
};

std::optional<ThetaCache> open_cache(const Options& o)
{
    if (auto dir = ThetaCache::resolve_dir(o.cache_dir))
        return ThetaCache(*dir);
    return std::nullopt;
}

std::string form_json_text(const QuadForm& f)
{
    json j = json::parse(form_to_json(f));
    j["name"] = f.to_string();
    j["dF"] = f.discriminant();
    return j.dump();
}

void print_form(const QuadForm& f, OutputFormat fmt, const std::string& label = "")
{
    switch (fmt) {
    case OutputFormat::json:
        std::cout << form_json_text(f) << '\n';
        break;
    case OutputFormat::csv:
        std::cout << (label.empty() ? "" : label + ",") << '"' << f.to_string() << "\"," << f.discriminant() << '\n';
        break;
    case OutputFormat::text:
        std::cout << (label.empty() ? "" : label + ": ") << f.to_string() << "  dF = " << f.discriminant() << '\n';
        break;
    }
}

int cmd_theta(const Options& o, OutputFormat fmt)
{
    const QuadForm f = parse_form(o.form);
    auto cache = open_cache(o);
    const auto coeffs = cache ? cache->theta(f, o.prec) : theta_coeffs(f, o.prec);
    if (fmt == OutputFormat::json) {
        std::cout << series_to_json(QSeries(1, 0, coeffs)) << '\n';
    } else if (fmt == OutputFormat::csv) {
        std::cout << "n,r\n";
        for (std::size_t n = 0; n < coeffs.size(); ++n)
            std::cout << n << ',' << coeffs[n] << '\n';
    } else {
        for (std::size_t n = 0; n < coeffs.size(); ++n)
            std::cout << "r(" << n << ") = " << coeffs[n] << '\n';
    }
    return exit_pass;
}

int cmd_sreg(const Options& o, OutputFormat fmt)
{
    const QuadForm f = parse_form(o.form);
    auto cache = open_cache(o);
    const RegularityReport r = is_strongly_s_regular(f, o.bound, cache ? cache->source() : ThetaSource{});
    std::cout << render(r, fmt);
    return r.pass ? exit_pass : exit_mismatch;
}

int cmd_lambda(const Options& o, OutputFormat fmt)
{
    print_form(lambda_composite(parse_form(o.form), o.level), fmt);
    return exit_pass;
}

int cmd_gamma(const Options& o, OutputFormat fmt)
{
    const GammaPair g = gamma_sublattices(parse_form(o.form), o.level);
    if (fmt == OutputFormat::json) {
        json j = json::array();
        for (const auto* s : {&g.first, &g.second})
            j.push_back({{"form", json::parse(form_json_text(s->form))}, {"basis", s->basis.to_rows()},
                {"index", s->index}});
        std::cout << j.dump() << '\n';
        return exit_pass;
    }
    if (fmt == OutputFormat::csv)
        std::cout << "sublattice,form,dF\n";
    print_form(g.first.form, fmt, "Gamma1");
    print_form(g.second.form, fmt, "Gamma2");
    return exit_pass;
}

int cmd_eta(const Options& o, OutputFormat fmt)
{
    const EtaQuotient eq = parse_eta_quotient(o.quotient, o.level);
    const QSeries s = eta_quotient_expansion(eq, o.prec);
    const NewmanReport nr = newman_check(eq);
    if (fmt == OutputFormat::json) {
        json j = json::parse(series_to_json(s));
        j["quotient"] = eq.to_string();
        j["weight"] = nr.weight.str();
        j["character_discriminant"] = nr.character_discriminant.str();
        j["newman"] = nr.holds();
        std::cout << j.dump() << '\n';
    } else if (fmt == OutputFormat::csv) {
        std::cout << "index,coefficient\n";
        for (i64 n = s.low(); n <= s.prec(); ++n)
            std::cout << n << ',' << s[n] << '\n';
    } else {
        std::cout << eq.to_string() << "  weight " << nr.weight.str() << "  s = " << nr.character_discriminant.str()
                  << "  Newman conditions " << (nr.holds() ? "hold" : "fail") << '\n';
        const std::string var = s.denom() == 1 ? "q^" : "q^(1/" + std::to_string(s.denom()) + ")^";
        for (i64 n = s.low(); n <= s.prec(); ++n)
            if (s[n] != 0)
                std::cout << "  " << s[n] << ' ' << var << n << '\n';
    }
    return exit_pass;
}

int cmd_sturm(const Options& o, OutputFormat fmt)
{
    const i64 b = sturm_bound(o.level, o.weight);
    if (fmt == OutputFormat::json)
        std::cout << json{{"level", o.level}, {"weight", o.weight}, {"sturm_bound", b}}.dump() << '\n';
    else if (fmt == OutputFormat::csv)
        std::cout << "level,weight,sturm_bound\n" << o.level << ',' << o.weight << ',' << b << '\n';
    else
        std::cout << b << '\n';
    return exit_pass;
}

int cmd_verify(const Options& o, OutputFormat fmt)
{
    if (o.target == "classification") {
        auto cache = open_cache(o);
        const ClassificationReport r = run_classification(o.bound ? o.bound : 300,
            cache ? cache->source() : ThetaSource{});
        std::cout << render(r, fmt);
        return r.pass() ? exit_pass : exit_mismatch;
    }
    if (o.target == "genus") {
        const GenusIdentitiesReport r = run_genus_identities({});
        std::cout << render(r, fmt);
        return r.pass() ? exit_pass : exit_mismatch;
    }
    const EtaQuotientReport r = run_eta_quotient_checks(o.prec ? o.prec : 200);
    std::cout << render(r, fmt);
    return r.pass() ? exit_pass : exit_mismatch;
}

int cmd_search(const Options& o, OutputFormat fmt)
{
    SearchConfig cfg;
    cfg.c_max = o.c_max;
    cfg.bound = o.bound ? o.bound : 50;
    cfg.filter_good_prime = !o.no_good_prime;
    cfg.filter_mod3 = !o.no_mod3;
    cfg.filter_mod5 = !o.no_mod5;
    cfg.threads = o.threads;
    std::function<void(i64, i64)> progress;
    if (o.progress)
        progress = [](i64 done, i64 total) { std::cerr << "\r" << done << "/" << total << std::flush; };
    const SearchResult r = search_diagonal(cfg, progress);
    if (o.progress)
        std::cerr << '\n';
    std::cout << render(r, fmt);
    return exit_pass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Representations of squares by quaternary quadratic forms"};
    app.require_subcommand(1);
    Options o;

    auto add_out = [&](CLI::App* c) {
        c->add_option("--out", o.out, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_form = [&](CLI::App* c) {
        c->add_option("--form", o.form, "Diagonal \"1,2,3,10\" or JSON {\"rank\":k,\"hessian\":[...]}")->required();
    };
    auto add_cache = [&](CLI::App* c) {
        c->add_option("--cache-dir", o.cache_dir, "Theta cache directory (QFLAB_CACHE overrides)");
    };

    auto* theta = app.add_subcommand("theta", "Representation numbers r(0..prec)");
    add_form(theta);
    theta->add_option("--prec", o.prec, "Largest n")->required()->check(CLI::NonNegativeNumber);
    add_cache(theta);
    add_out(theta);

    auto* sreg = app.add_subcommand("sreg", "Strong s-regularity check up to a bound");
    add_form(sreg);
    sreg->add_option("--bound", o.bound, "Check n <= bound")->required()->check(CLI::PositiveNumber);
    add_cache(sreg);
    add_out(sreg);

    auto* lambda = app.add_subcommand("lambda", "Watson transform lambda_N");
    add_form(lambda);
    lambda->add_option("--level", o.level, "N")->required()->check(CLI::PositiveNumber);
    add_out(lambda);

    auto* gamma = app.add_subcommand("gamma", "The two index-p sublattices with norm in pZ");
    add_form(gamma);
    gamma->add_option("--level", o.level, "Odd prime p")->required();
    add_out(gamma);

    auto* eta = app.add_subcommand("eta", "Eta quotient expansion");
    eta->add_option("--quotient", o.quotient, "delta:r list, e.g. 2:2,15:3,1:-1")->required();
    eta->add_option("--level", o.level, "Level N")->required()->check(CLI::PositiveNumber);
    eta->add_option("--prec", o.prec, "Largest q exponent")->required()->check(CLI::PositiveNumber);
    add_out(eta);

    auto* sturm = app.add_subcommand("sturm", "Sturm bound for Gamma_0(N)");
    sturm->add_option("--level", o.level, "Level N")->required()->check(CLI::PositiveNumber);
    sturm->add_option("--weight", o.weight, "Even weight k");
    add_out(sturm);

    auto* verify = app.add_subcommand("verify", "Run a bundled verification");
    verify->add_option("target", o.target, "classification | genus | eta-quotients")
        ->required()
        ->check(CLI::IsMember({"classification", "genus", "eta-quotients"}));
    verify->add_option("--bound", o.bound, "Bound for classification (default 300)")->check(CLI::PositiveNumber);
    verify->add_option("--prec", o.prec, "Precision for eta-quotients (default 200)");
    add_cache(verify);
    add_out(verify);

    auto* search = app.add_subcommand("search", "Search diagonal forms <1,a,b,c>");
    search->add_option("--cmax", o.c_max, "Largest c (default 121)")->check(CLI::PositiveNumber);
    search->add_option("--bound", o.bound, "Check n <= bound (default 50)")->check(CLI::PositiveNumber);
    search->add_option("--threads", o.threads, "Worker threads (default: all cores)");
    search->add_flag("--no-good-prime", o.no_good_prime, "Disable the good-prime prune (105 | dL)");
    search->add_flag("--no-mod3", o.no_mod3, "Disable the n = 3 prune");
    search->add_flag("--no-mod5", o.no_mod5, "Disable the n = 5 prune");
    search->add_flag("--progress", o.progress, "Progress on stderr");
    add_out(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        const OutputFormat fmt = parse_output_format(o.out);
        if (theta->parsed())
            return cmd_theta(o, fmt);
        if (sreg->parsed())
            return cmd_sreg(o, fmt);
        if (lambda->parsed())
            return cmd_lambda(o, fmt);
        if (gamma->parsed())
            return cmd_gamma(o, fmt);
        if (eta->parsed())
            return cmd_eta(o, fmt);
        if (sturm->parsed())
            return cmd_sturm(o, fmt);
        if (verify->parsed())
            return cmd_verify(o, fmt);
        return cmd_search(o, fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
