#include "polywh/io.hpp"

#include <cstdio>
#include <sstream>

namespace polywh {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Json to_json(const AlgebraSpec& spec) {
    return Json{{"kappas", spec.kappas()}, {"phi", spec.phi()}};
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            rows.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    return rows;
}

Json to_json(const FockOperators& ops) {
    return Json{{"dim", ops.dim},
                {"spec", to_json(ops.spec)},
                {"truncated", ops.truncated},
                {"a_minus", to_json(ops.a_minus)},
                {"a_plus", to_json(ops.a_plus)},
                {"number", to_json(ops.number)}};
}

Json to_json(const PassageCoeffs& coeffs) {
    Json c = Json::array();
    for (const Complex& v : coeffs.c) c.push_back(Json::array({v.real(), v.imag()}));
    return Json{{"k", coeffs.k}, {"c", c}};
}

Json to_json(const BosonicState& state) {
    Json coeffs = Json::array();
    for (Eigen::Index i = 0; i < state.coeffs.size(); ++i)
        coeffs.push_back(Json::array({state.coeffs(i).real(), state.coeffs(i).imag()}));
    return Json{{"family", state.family == Family::perelomov ? "perelomov" : "barut-girardello"},
                {"spec", to_json(state.spec)},
                {"z", Json::array({state.z.real(), state.z.imag()})},
                {"phi", state.phi},
                {"truncated", state.truncated},
                {"series", state.series},
                {"norm_sq", state.norm_sq},
                {"coeffs", coeffs}};
}

Json to_json(const GrassmannState& state) {
    Json amps = Json::array();
    for (const auto& a : state.amps) amps.push_back(to_canonical_string(a));
    return Json{{"family", "barut-girardello-grassmann"},
                {"spec", to_json(state.spec)},
                {"theta_order", state.order},
                {"phi", state.phi},
                {"truncated", state.truncated},
                {"coeffs", amps}};
}

Json to_json(const CheckReport& report) {
    Json items = Json::array();
    for (const auto& c : report.items()) {
        Json item{{"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass}};
        if (!c.note.empty()) item["note"] = c.note;
        items.push_back(item);
    }
    return Json{{"pass", report.all_pass()}, {"max_residual", report.max_residual()},
                {"checks", items}};
}

std::string measure_csv_header() { return "family,spec,n,value,error"; }

std::string measure_csv_row(const std::string& family, const AlgebraSpec& spec, int n,
                            double value, double error) {
    std::ostringstream os;
    os << family << ",\"kappas=[";
    const auto& k = spec.kappas();
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? " " : "") << format_double(k[i]);
    os << "] phi=" << format_double(spec.phi()) << "\"," << n << "," << format_double(value)
       << "," << format_double(error);
    return os.str();
}

}  // namespace polywh
