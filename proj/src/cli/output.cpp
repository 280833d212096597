#include "cli/output.hpp"

#include <algorithm>
#include <ostream>

#include "cyarith/errors.hpp"

namespace cyarith::cli {

Json bigints_to_json(const std::vector<BigInt>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_decimal(x));
  return out;
}

std::vector<BigInt> bigints_from_json(const Json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(from_decimal(x.get<std::string>()));
  return out;
}

Json to_json(const cyclo::CycInt& x) {
  return Json{{"conductor", x.conductor()}, {"coefficients", bigints_to_json(x.coefficients())}};
}

cyclo::CycInt cycint_from_json(const Json& j) {
  return cyclo::CycInt::from_coefficients(j.at("conductor").get<int>(), bigints_from_json(j.at("coefficients")));
}

Json to_json(const counting::DiagonalVariety& v) {
  Json out{{"exponents", v.exponents}, {"dimension", v.complex_dim()}};
  if (v.is_fermat()) out["degree"] = v.degree();
  return out;
}

Json to_json(const zeta::LocalFactor& lf) {
  Json roots = Json::array();
  for (const auto& r : lf.roots) {
    roots.push_back(Json{{"beta", to_json(r.beta)}, {"multiplicity", r.multiplicity}, {"t_power", r.t_power}});
  }
  return Json{{"p", lf.p},
              {"cohomology_degree", lf.cohomology_degree},
              {"max_t_degree", lf.max_t_degree},
              {"omitted_degree", lf.omitted_degree},
              {"roots", roots},
              {"coefficients", bigints_to_json(lf.coeffs)}};
}

zeta::LocalFactor local_factor_from_json(const Json& j) {
  zeta::LocalFactor lf;
  lf.p = j.at("p").get<long>();
  lf.cohomology_degree = j.at("cohomology_degree").get<int>();
  lf.max_t_degree = j.at("max_t_degree").get<int>();
  lf.omitted_degree = j.at("omitted_degree").get<int>();
  for (const auto& r : j.at("roots")) {
    lf.roots.push_back(zeta::Root{cycint_from_json(r.at("beta")), r.at("multiplicity").get<int>(),
                                  r.at("t_power").get<int>()});
  }
  lf.coeffs = bigints_from_json(j.at("coefficients"));
  return lf;
}

std::string rational_string(const cft::Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void Table::write_csv(std::ostream& os) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void Table::write_text(std::ostream& os) const {
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  widen(header);
  for (const auto& r : rows) widen(r);
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? "  " : "") << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

}  // namespace cyarith::cli
