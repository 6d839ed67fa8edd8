#include "qflab/lattice_data.hpp"

#include <stdexcept>

#include "json.hpp"

namespace qflab {

namespace detail {
extern const char* const lattice_data_json;
}

namespace {

QuadForm form_from_gram_json(const nlohmann::json& rows)
{
    return QuadForm::from_gram(IntMatrix::from_rows(rows.get<std::vector<std::vector<i64>>>()));
}

} // namespace

QuadForm ClassifiedForm::form() const
{
    return QuadForm::diagonal({diagonal.begin(), diagonal.end()});
}

const GenusPair& LatticeData::genus_pair(std::string_view name) const
{
    for (const auto& g : genus_pairs)
        if (g.name == name)
            return g;
    throw std::out_of_range("no genus pair named " + std::string(name));
}

const QuadForm& LatticeData::lattice(std::string_view name) const
{
    const auto it = lattices.find(std::string(name));
    if (it == lattices.end())
        throw std::out_of_range("no lattice named " + std::string(name));
    return it->second.form;
}

LatticeData parse_lattice_data(const std::string& json_text)
{
    const auto j = nlohmann::json::parse(json_text);
    LatticeData data;
    data.version = j.at("version").get<int>();

    const auto& cls = j.at("classification");
    for (const auto& g : cls.at("groups")) {
        data.groups.push_back({g.at("id").get<std::string>(), g.at("label").get<std::string>()});
        for (const auto& f : g.at("forms"))
            data.classification.push_back({f.get<std::array<i64, 4>>(), data.groups.back().id, true});
    }
    for (const auto& f : cls.at("not_regular"))
        data.classification.push_back({f.get<std::array<i64, 4>>(), "", false});

    for (const auto& [name, entry] : j.at("lattices").items())
        data.lattices.emplace(name,
            NamedLattice{form_from_gram_json(entry.at("gram")), entry.value("role", ""), entry.at("dL").get<i64>()});

    for (const auto& p : j.at("genus_pairs")) {
        GenusPair pair{p.at("name").get<std::string>(), data.lattice(p.at("primary").get<std::string>()),
            data.lattice(p.at("mate").get<std::string>()), {}};
        for (const auto& aux : p.at("auxiliaries")) {
            const auto name = aux.get<std::string>();
            pair.auxiliaries.emplace(name, data.lattice(name));
        }
        if (pair.primary.rank() != pair.mate.rank() || pair.primary.discriminant() != pair.mate.discriminant())
            throw std::invalid_argument("genus pair " + pair.name + " has mismatched rank or discriminant");
        data.genus_pairs.push_back(std::move(pair));
    }
    return data;
}

const LatticeData& lattice_data()
{
    static const LatticeData data = parse_lattice_data(detail::lattice_data_json);
    return data;
}

} // namespace qflab
