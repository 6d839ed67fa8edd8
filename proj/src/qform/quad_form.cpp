#include "qflab/quad_form.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qflab {

QuadForm::QuadForm(IntMatrix hessian) : hessian_(std::move(hessian))
{
    const std::size_t k = hessian_.rows();
    if (k == 0 || k > 4 || hessian_.cols() != k)
        throw std::invalid_argument("form rank must be 1..4 with a square Hessian");
    if (!hessian_.is_symmetric())
        throw std::invalid_argument("Hessian is not symmetric");
    for (std::size_t i = 0; i < k; ++i)
        if (hessian_(i, i) % 2 != 0)
            throw std::invalid_argument("Hessian diagonal must be even");
    for (std::size_t m = 1; m <= k; ++m)
        if (determinant(hessian_.leading(m)) <= 0)
            throw std::invalid_argument("form is not positive definite");
    discriminant_ = determinant(hessian_);
}

QuadForm QuadForm::diagonal(const std::vector<i64>& coeffs)
{
    IntMatrix h(coeffs.size(), coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        h(i, i) = checked_mul(2, coeffs[i]);
    return QuadForm(std::move(h));
}

QuadForm QuadForm::from_gram(const IntMatrix& gram)
{
    return QuadForm(gram * 2);
}

i64 QuadForm::norm_gcd() const
{
    i64 g = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        g = std::gcd(g, hessian_(i, i) / 2);
        for (std::size_t j = i + 1; j < rank(); ++j)
            g = std::gcd(g, hessian_(i, j));
    }
    return g;
}

i64 QuadForm::evaluate(const std::vector<i64>& v) const
{
    if (v.size() != rank())
        throw std::invalid_argument("vector length does not match form rank");
    i128 acc = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        acc += static_cast<i128>(hessian_(i, i) / 2) * v[i] * v[i];
        for (std::size_t j = i + 1; j < rank(); ++j)
            acc += static_cast<i128>(hessian_(i, j)) * v[i] * v[j];
    }
    return narrow(acc);
}

QuadForm QuadForm::sublattice(const IntMatrix& basis) const
{
    if (basis.rows() != rank())
        throw std::invalid_argument("basis dimension mismatch");
    return QuadForm(basis.transpose() * hessian_ * basis);
}

QuadForm QuadForm::scaled_down(i64 factor) const
{
    if (factor <= 0)
        throw std::invalid_argument("scale factor must be positive");
    IntMatrix h = hessian_;
    for (std::size_t i = 0; i < rank(); ++i) {
        if ((h(i, i) / 2) % factor != 0)
            throw std::domain_error("scaled form would not be integral");
        for (std::size_t j = 0; j < rank(); ++j) {
            if (h(i, j) % factor != 0)
                throw std::domain_error("scaled form would not be integral");
            h(i, j) /= factor;
        }
    }
    return QuadForm(std::move(h));
}

bool QuadForm::is_diagonal() const
{
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = i + 1; j < rank(); ++j)
            if (hessian_(i, j) != 0)
                return false;
    return true;
}

std::string QuadForm::to_string() const
{
    std::ostringstream os;
    if (is_diagonal()) {
        os << '<';
        for (std::size_t i = 0; i < rank(); ++i)
            os << (i ? "," : "") << hessian_(i, i) / 2;
        os << '>';
    } else {
        os << "H" << hessian_;
    }
    return os.str();
}

QuadForm direct_sum(const QuadForm& a, const QuadForm& b)
{
    const std::size_t k = a.rank() + b.rank();
    IntMatrix h(k, k);
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j)
            h(i, j) = a.hessian(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j)
            h(a.rank() + i, a.rank() + j) = b.hessian(i, j);
    return QuadForm(std::move(h));
}

QuadForm parse_form(std::string_view text)
{
    std::size_t first = text.find_first_not_of(" \t\n");
    if (first == std::string_view::npos)
        throw std::invalid_argument("empty form literal");
    text.remove_prefix(first);

    if (text.front() == '{') {
        const auto j = nlohmann::json::parse(text);
        const auto rows = j.at("hessian").get<std::vector<std::vector<i64>>>();
        if (j.contains("rank") && j.at("rank").get<std::size_t>() != rows.size())
            throw std::invalid_argument("rank field disagrees with Hessian size");
        return QuadForm(IntMatrix::from_rows(rows));
    }

    std::string s(text);
    if (!s.empty() && (s.front() == '<' || s.front() == '['))
        s = s.substr(1);
    if (!s.empty() && (s.back() == '>' || s.back() == ']'))
        s.pop_back();
    std::vector<i64> coeffs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const long long v = std::stoll(item, &pos);
        if (item.find_first_not_of(" \t", pos) != std::string::npos)
            throw std::invalid_argument("bad diagonal entry: " + item);
        coeffs.push_back(v);
    }
    return QuadForm::diagonal(coeffs);
}

std::string form_to_json(const QuadForm& form)
{
    nlohmann::json j;
    j["rank"] = form.rank();
    j["hessian"] = form.hessian().to_rows();
    return j.dump();
}

} // namespace qflab
