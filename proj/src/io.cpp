#include "gsp4/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

namespace gsp4 {

Json to_json(const BigRational& q) { return to_string(q); }

Json to_json(const PiQuantity& x) {
    Json j;
    j["coeff"] = to_string(x.coeff());
    j["pi_exp"] = x.pi_exp();
    return j;
}

Json to_json(const BigInt& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

BigRational rational_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return BigRational(BigInt(j.dump()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(field, std::string("not a rational number: ") + e.what());
        }
    }
    if (j.is_number_float()) throw InputError(field, "floating-point values are not exact; use a \"num/den\" string");
    throw InputError(field, "expected a rational as a \"num/den\" string");
}

BigInt integer_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return BigInt(j.dump());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t start = !s.empty() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
        bool digits = s.size() > start;
        for (std::size_t k = start; k < s.size(); ++k) digits = digits && s[k] >= '0' && s[k] <= '9';
        if (!digits) throw InputError(field, "not an integer: \"" + s + "\"");
        return BigInt(s[0] == '+' ? s.substr(1) : s);
    }
    if (j.is_number_float()) throw InputError(field, "floating-point values are not exact integers");
    throw InputError(field, "expected an integer");
}

PiQuantity pi_from_json(const Json& j, const std::string& field) {
    if (!j.is_object()) throw InputError(field, "expected an object with \"coeff\" and \"pi_exp\"");
    if (!j.contains("coeff")) throw InputError(field + ".coeff", "missing");
    if (!j.contains("pi_exp")) throw InputError(field + ".pi_exp", "missing");
    if (!j["pi_exp"].is_number_integer()) throw InputError(field + ".pi_exp", "expected an integer");
    return PiQuantity(rational_from_json(j["coeff"], field + ".coeff"), j["pi_exp"].get<long>());
}

RationalMatrix matrix_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw InputError(field, "expected a nonempty array of rows");
    std::size_t cols = 0;
    for (std::size_t r = 0; r < j.size(); ++r) {
        std::string rf = field + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].empty()) throw InputError(rf, "expected a nonempty array");
        if (r == 0) cols = j[r].size();
        if (j[r].size() != cols)
            throw InputError(rf, "has " + std::to_string(j[r].size()) + " entries, expected " + std::to_string(cols));
    }
    RationalMatrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rational_from_json(j[r][c], field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    return m;
}

LatticeInput lattice_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("<root>", "expected a JSON object");
    for (const char* key : {"prime", "basis", "gram"})
        if (!j.contains(key)) throw InputError(key, "missing");
    if (!j["prime"].is_number_integer() || j["prime"].get<long long>() < 2) throw InputError("prime", "expected a prime number");
    auto p = j["prime"].get<unsigned long long>();
    if (!is_prime(static_cast<unsigned long>(p))) throw InputError("prime", std::to_string(p) + " is not prime");
    bool alternating = false;
    if (j.contains("alternating")) {
        if (!j["alternating"].is_boolean()) throw InputError("alternating", "expected true or false");
        alternating = j["alternating"].get<bool>();
    }
    RationalMatrix basis = matrix_from_json(j["basis"], "basis");
    RationalMatrix gram = matrix_from_json(j["gram"], "gram");
    if (basis.rows() != basis.cols()) throw InputError("basis", "must be square");
    if (gram.rows() != basis.rows() || gram.cols() != basis.cols()) throw InputError("gram", "dimension differs from basis");

    LatticeInput in{LatticeZp{}, BilinearForm{}, std::nullopt};
    try {
        in.lattice = LatticeZp::make(static_cast<unsigned long>(p), basis);
    } catch (const std::invalid_argument& e) {
        throw InputError("basis", e.what());
    }
    try {
        in.form = BilinearForm::make(gram, alternating);
    } catch (const std::invalid_argument& e) {
        throw InputError("gram", e.what());
    }
    if (j.contains("splitter")) {
        RationalMatrix e = matrix_from_json(j["splitter"], "splitter");
        if (e.rows() != basis.rows() || e.cols() != basis.cols()) throw InputError("splitter", "dimension differs from basis");
        in.splitter = e;
    }
    return in;
}

Json to_json(const LatticeInput& in) {
    Json j;
    j["prime"] = in.lattice.p;
    j["basis"] = to_json(in.lattice.basis);
    j["gram"] = to_json(in.form.gram);
    j["alternating"] = in.form.alternating;
    if (in.splitter) j["splitter"] = to_json(*in.splitter);
    return j;
}

EigenSystem eigen_system_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("<root>", "expected a JSON object");
    if (!j.contains("min_poly")) throw InputError("min_poly", "missing");
    if (!j.contains("values")) throw InputError("values", "missing");
    const Json& mp = j["min_poly"];
    if (!mp.is_array()) throw InputError("min_poly", "expected an array of integers");
    EigenSystem e;
    for (std::size_t k = 0; k < mp.size(); ++k)
        e.min_poly.push_back(integer_from_json(mp[k], "min_poly[" + std::to_string(k) + "]"));
    if (e.min_poly.size() < 2) throw InputError("min_poly", "needs degree at least 1");
    if (e.min_poly[0] != 1) throw InputError("min_poly", "not monic (leading coefficient must be 1)");
    const Json& vals = j["values"];
    if (!vals.is_object()) throw InputError("values", "expected an object keyed by T_n");
    for (const auto& [label, coords] : vals.items()) {
        std::string field = "values." + label;
        if (!hecke_label_index(label)) throw InputError(field, "label is not of the form T_n with n >= 1");
        if (!coords.is_array() || coords.empty()) throw InputError(field, "expected a nonempty array of integers");
        std::vector<BigInt> c;
        for (std::size_t k = 0; k < coords.size(); ++k)
            c.push_back(integer_from_json(coords[k], field + "[" + std::to_string(k) + "]"));
        if (c.size() > e.degree())
            throw InputError(field, "has " + std::to_string(c.size()) + " coordinates, min_poly has degree " + std::to_string(e.degree()));
        e.values[label] = c;
    }
    e.validate();
    return e;
}

Json to_json(const EigenSystem& e) {
    Json j;
    Json mp = Json::array();
    for (const auto& c : e.min_poly) mp.push_back(to_json(c));
    j["min_poly"] = mp;
    std::vector<std::pair<long, std::string>> order;
    for (const auto& [label, v] : e.values) order.emplace_back(hecke_label_index(label).value_or(0), label);
    std::sort(order.begin(), order.end());
    Json vals = Json::object();
    for (const auto& [n, label] : order) {
        Json coords = Json::array();
        for (const auto& c : e.values.at(label)) coords.push_back(to_json(c));
        vals[label] = coords;
    }
    j["values"] = vals;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path, "cannot open file");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path, std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace gsp4
