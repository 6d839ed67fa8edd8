#include "qflab/paperlab.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qflab {

using nlohmann::json;

namespace {

std::string verdict(const RegularityReport& r)
{
    return r.pass ? "pass" : "fail";
}

std::string diag_string(const std::array<i64, 4>& d)
{
    return "<" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ","
        + std::to_string(d[3]) + ">";
}

std::string csv_row(const RegularityReport& r)
{
    std::ostringstream os;
    os << '"' << r.form.to_string() << "\"," << r.form.discriminant() << ',';
    if (r.ms)
        os << *r.ms;
    os << ',' << verdict(r) << ',';
    if (r.counterexample)
        os << r.counterexample->n << ',' << r.counterexample->expected.str() << ',' << r.counterexample->actual;
    else
        os << ",,";
    return os.str();
}

const char* csv_header = "form,dF,ms,verdict,witness_n,expected,actual\n";

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

std::string opt_string(const std::optional<i64>& v)
{
    return v ? std::to_string(*v) : "-";
}

json identity_json(const IdentityReport& rep)
{
    json j{{"family", rep.family}, {"pass", rep.pass()}, {"identities", json::array()}};
    for (const auto& id : rep.identities) {
        json e{{"name", id.name}, {"checked_through", id.checked_through}, {"pass", id.pass}};
        if (id.n)
            e["counterexample"] = {{"n", *id.n}, {"lhs", id.lhs}, {"rhs", id.rhs}};
        j["identities"].push_back(e);
    }
    return j;
}

json sturm_json(const SturmComparison& s)
{
    json j{{"coefficients", s.coefficients}, {"pass", s.pass}};
    if (s.first_mismatch)
        j["first_mismatch"] = *s.first_mismatch;
    return j;
}

json quotient_json(const QuotientCheck& q)
{
    json cusps = json::array();
    for (const auto& c : q.cusps)
        cusps.push_back({{"d", c.d}, {"order", c.order.str()}});
    json j{
        {"index", q.index},
        {"quotient", q.quotient.to_string()},
        {"pass", q.pass()},
        {"prefix_matches", q.prefix_matches},
        {"weight", q.newman.weight.str()},
        {"character_discriminant", q.newman.character_discriminant.str()},
        {"newman", q.newman.holds()},
        {"character_matches", q.character_matches},
        {"cusp_orders", cusps},
        {"cusp_form", is_cusp_form(q.cusps)},
    };
    if (q.sum_mismatch)
        j["sum_mismatch"] = *q.sum_mismatch;
    if (q.vanishing_failure)
        j["vanishing_failure"] = *q.vanishing_failure;
    return j;
}

} // namespace

OutputFormat parse_output_format(const std::string& name)
{
    if (name == "text")
        return OutputFormat::text;
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    throw std::invalid_argument("unknown output format '" + name + "' (text, json, csv)");
}

std::string render(const RegularityReport& r, OutputFormat f)
{
    switch (f) {
    case OutputFormat::json:
        return dump(json::parse(r.to_json()));
    case OutputFormat::csv:
        return csv_header + csv_row(r) + "\n";
    case OutputFormat::text:
        break;
    }
    std::ostringstream os;
    os << r.form.to_string() << "  dF = " << r.form.discriminant() << "  m_s = " << opt_string(r.ms) << '\n';
    if (r.pass) {
        os << "strongly s-regular: verified up to bound " << r.bound << '\n';
    } else if (r.counterexample) {
        const auto& c = *r.counterexample;
        os << "not strongly s-regular: n = " << c.n << " (n1 = " << c.n1 << "), expected r(n^2) = "
           << c.expected.str() << ", actual " << c.actual << '\n';
    } else {
        os << "not strongly s-regular: no square up to bound " << r.bound << " is represented\n";
    }
    return os.str();
}

std::string render(const ClassificationReport& r, OutputFormat f)
{
    const auto& data = lattice_data();
    if (f == OutputFormat::csv) {
        std::string out = csv_header;
        for (const auto& row : r.rows)
            out += csv_row(row.report) + "\n";
        return out;
    }
    if (f == OutputFormat::json) {
        json j{{"bound", r.bound}, {"pass", r.pass()}, {"groups", json::array()}};
        for (const auto& g : data.groups) {
            json forms = json::array();
            for (const auto& row : r.rows)
                if (row.entry.group == g.id)
                    forms.push_back(json::parse(row.report.to_json()));
            j["groups"].push_back({{"id", g.id}, {"label", g.label}, {"forms", forms}});
        }
        json bad = json::array();
        for (const auto& row : r.rows)
            if (!row.entry.expected_regular)
                bad.push_back(json::parse(row.report.to_json()));
        j["not_regular"] = bad;
        return dump(j);
    }

    std::ostringstream os;
    auto table = [&](const std::string& title, auto&& keep) {
        os << "## " << title << "\n\n| form | dF | m_s | verdict | witness |\n|---|---|---|---|---|\n";
        for (const auto& row : r.rows) {
            if (!keep(row))
                continue;
            const auto& rep = row.report;
            os << "| " << rep.form.to_string() << " | " << rep.form.discriminant() << " | " << opt_string(rep.ms)
               << " | " << verdict(rep) << (row.matches() ? "" : " (unexpected)") << " | ";
            if (rep.counterexample)
                os << "n = " << rep.counterexample->n << ": " << rep.counterexample->expected.str() << " vs "
                   << rep.counterexample->actual;
            os << " |\n";
        }
        os << '\n';
    };
    for (const auto& g : data.groups)
        table(g.label, [&](const ClassificationRow& row) { return row.entry.group == g.id; });
    table("expected to fail", [](const ClassificationRow& row) { return !row.entry.expected_regular; });
    os << (r.pass() ? "all verdicts as expected" : "VERDICT MISMATCH") << ", verified up to bound " << r.bound
       << '\n';
    return os.str();
}

std::string render(const GenusIdentitiesReport& r, OutputFormat f)
{
    if (f == OutputFormat::json) {
        json j{{"pass", r.pass()}, {"families", json::array()}, {"sturm", sturm_json(r.sturm)}};
        for (const auto& fam : r.families)
            j["families"].push_back(identity_json(fam));
        return dump(j);
    }
    if (f == OutputFormat::csv) {
        std::string out = "family,identity,checked_through,pass,n,lhs,rhs\n";
        for (const auto& fam : r.families)
            for (const auto& id : fam.identities) {
                out += fam.family + ",\"" + id.name + "\"," + std::to_string(id.checked_through) + ","
                    + (id.pass ? "pass" : "fail") + ",";
                out += id.n ? std::to_string(*id.n) + "," + std::to_string(id.lhs) + "," + std::to_string(id.rhs)
                            : std::string(",,");
                out += "\n";
            }
        out += "L3,\"(theta_L3 - theta_L3')/2 = F1 + F2 - 4F3\"," + std::to_string(r.sturm.coefficients) + ","
            + (r.sturm.pass ? "pass" : "fail") + "," + (r.sturm.first_mismatch ? std::to_string(*r.sturm.first_mismatch) : "")
            + ",,\n";
        return out;
    }
    std::ostringstream os;
    for (const auto& fam : r.families) {
        os << fam.family << '\n';
        for (const auto& id : fam.identities) {
            os << "  " << (id.pass ? "pass" : "FAIL") << "  " << id.name << "  (n <= " << id.checked_through << ")";
            if (id.n)
                os << "  n = " << *id.n << ": " << id.lhs << " vs " << id.rhs;
            os << '\n';
        }
    }
    os << "L3 level 120\n  " << (r.sturm.pass ? "pass" : "FAIL")
       << "  (theta_L3 - theta_L3')/2 = F1 + F2 - 4F3 through the Sturm bound, " << r.sturm.coefficients
       << " coefficients";
    if (r.sturm.first_mismatch)
        os << "  first mismatch at q^" << *r.sturm.first_mismatch;
    os << '\n';
    return os.str();
}

std::string render(const EtaQuotientReport& r, OutputFormat f)
{
    if (f == OutputFormat::json) {
        json j{{"pass", r.pass()}, {"prec", r.prec}, {"sum_range", r.sum_range}, {"quotients", json::array()},
            {"b_weighted_a3_mismatches", r.b_weighted_a3_mismatches}};
        for (const auto& q : r.quotients)
            j["quotients"].push_back(quotient_json(q));
        return dump(j);
    }
    if (f == OutputFormat::csv) {
        std::string out = "index,quotient,prefix,sums,vanishing,newman,character,cusp_form\n";
        for (const auto& q : r.quotients) {
            auto b = [](bool v) { return std::string(v ? "pass" : "fail"); };
            out += std::to_string(q.index) + ",\"" + q.quotient.to_string() + "\"," + b(q.prefix_matches) + ","
                + b(!q.sum_mismatch) + "," + b(!q.vanishing_failure) + "," + b(q.newman.holds()) + ","
                + b(q.character_matches) + "," + b(is_cusp_form(q.cusps)) + "\n";
        }
        return out;
    }
    std::ostringstream os;
    for (const auto& q : r.quotients) {
        os << "F" << q.index << " = " << q.quotient.to_string() << "  weight " << q.newman.weight.str()
           << "  s = " << q.newman.character_discriminant.str() << '\n';
        auto line = [&](bool ok, const std::string& what) {
            os << "  " << (ok ? "pass" : "FAIL") << "  " << what << '\n';
        };
        line(q.prefix_matches, "leading coefficients");
        line(!q.sum_mismatch,
            "lattice sum = coefficient for n <= " + std::to_string(r.sum_range)
                + (q.sum_mismatch ? " (first mismatch n = " + std::to_string(*q.sum_mismatch) + ")" : ""));
        line(!q.vanishing_failure,
            "coefficients vanish for n == 1, 4 mod 5, n <= " + std::to_string(r.prec)
                + (q.vanishing_failure ? " (n = " + std::to_string(*q.vanishing_failure) + ")" : ""));
        line(q.newman.holds(), "Newman conditions on Gamma_0(120)");
        line(q.character_matches, "character is (60/m)");
        std::string orders;
        for (const auto& c : q.cusps)
            orders += (orders.empty() ? "" : " ") + std::to_string(c.d) + ":" + c.order.str();
        line(is_cusp_form(q.cusps), "positive order at every cusp [" + orders + "]");
    }
    os << "note: the A3 sum weighted by b differs from F3 at " << r.b_weighted_a3_mismatches.size() << " of "
       << r.sum_range << " coefficients";
    if (!r.b_weighted_a3_mismatches.empty())
        os << " (first n = " << r.b_weighted_a3_mismatches.front() << ")";
    os << "; the unweighted sum is the one checked above\n";
    return os.str();
}

std::string render(const SearchResult& r, OutputFormat f)
{
    if (f == OutputFormat::json) {
        json reps = json::array();
        for (const auto& d : r.representatives)
            reps.push_back(d);
        json surv = json::array();
        for (const auto& d : r.survivors)
            surv.push_back(d);
        return dump({{"c_max", r.config.c_max}, {"bound", r.config.bound},
            {"filters", {{"good-prime", r.config.filter_good_prime}, {"mod3", r.config.filter_mod3},
                            {"mod5", r.config.filter_mod5}}},
            {"examined", r.examined}, {"pruned", r.pruned}, {"survivors", surv}, {"representatives", reps}});
    }
    if (f == OutputFormat::csv) {
        std::string out = "form,dF\n";
        for (const auto& d : r.representatives)
            out += "\"" + diag_string(d) + "\"," + std::to_string(16 * d[1] * d[2] * d[3]) + "\n";
        return out;
    }
    std::ostringstream os;
    os << "examined " << r.examined << " forms <1,a,b,c> with c <= " << r.config.c_max << ", pruned " << r.pruned
       << ", " << r.survivors.size() << " pass, " << r.representatives.size() << " up to isometry\n";
    for (const auto& d : r.representatives)
        os << "  " << diag_string(d) << '\n';
    os << "verified up to bound " << r.config.bound << '\n';
    return os.str();
}

} // namespace qflab
