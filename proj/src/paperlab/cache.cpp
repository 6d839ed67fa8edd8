#include "qflab/paperlab.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "qflab/reduction.hpp"

namespace qflab {

namespace fs = std::filesystem;

namespace {

std::string fnv1a_hex(const void* data, std::size_t len, std::uint64_t h = 1469598103934665603ULL)
{
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

std::string form_hash(const QuadForm& form)
{
    const std::string canon = form_to_json(minkowski_reduce(form).form);
    return fnv1a_hex(canon.data(), canon.size());
}

std::string coefficient_checksum(const std::vector<i64>& coeffs)
{
    return fnv1a_hex(coeffs.data(), coeffs.size() * sizeof(i64));
}

ThetaCache::ThetaCache(fs::path dir, Warn warn) : dir_(std::move(dir)), warn_(std::move(warn))
{
    if (!warn_)
        warn_ = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
    fs::create_directories(dir_);
}

fs::path ThetaCache::path_for(const QuadForm& form) const
{
    return dir_ / (form_hash(form) + ".json");
}

std::vector<i64> ThetaCache::theta(const QuadForm& form, i64 prec)
{
    const QuadForm reduced = minkowski_reduce(form).form;
    const std::string hash = form_hash(reduced);
    const fs::path path = dir_ / (hash + ".json");

    if (fs::exists(path)) {
        try {
            std::ifstream in(path);
            const auto j = nlohmann::json::parse(in);
            auto coeffs = j.at("coeffs").get<std::vector<i64>>();
            const bool valid = j.at("formHash").get<std::string>() == hash
                && parse_form(j.at("form").dump()) == reduced
                && j.at("prec").get<i64>() + 1 == static_cast<i64>(coeffs.size())
                && j.at("checksum").get<std::string>() == coefficient_checksum(coeffs);
            if (!valid)
                throw std::runtime_error("header does not match contents");
            if (static_cast<i64>(coeffs.size()) > prec) {
                ++hits_;
                coeffs.resize(static_cast<std::size_t>(prec + 1));
                return coeffs;
            }
        } catch (const std::exception& e) {
            warn_("theta cache file " + path.string() + " is corrupt (" + e.what() + "); recomputing");
        }
    }

    ++misses_;
    auto coeffs = theta_coeffs(reduced, prec);
    nlohmann::json j;
    j["formHash"] = hash;
    j["form"] = nlohmann::json::parse(form_to_json(reduced));
    j["prec"] = prec;
    j["checksum"] = coefficient_checksum(coeffs);
    j["coeffs"] = coeffs;

    std::random_device rd;
    const fs::path tmp = dir_ / (hash + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp);
        out << j.dump();
        if (!out)
            throw std::runtime_error("cannot write theta cache file " + tmp.string());
    }
    fs::rename(tmp, path);
    return coeffs;
}

ThetaSource ThetaCache::source()
{
    return [this](const QuadForm& f, i64 prec) { return theta(f, prec); };
}

std::optional<fs::path> ThetaCache::resolve_dir(const std::string& flag)
{
    if (const char* env = std::getenv("QFLAB_CACHE"); env && *env)
        return fs::path(env);
    if (!flag.empty())
        return fs::path(flag);
    return std::nullopt;
}

} // namespace qflab
