#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyarith/bigint.hpp"
#include "cyarith/cft.hpp"
#include "cyarith/counting.hpp"
#include "cyarith/cyclo.hpp"
#include "cyarith/zeta.hpp"

namespace cyarith::cli {

using Json = nlohmann::ordered_json;

Json bigints_to_json(const std::vector<BigInt>& xs);
std::vector<BigInt> bigints_from_json(const Json& j);

// {"conductor": m, "coefficients": ["..", ...]} in the power basis.
Json to_json(const cyclo::CycInt& x);
cyclo::CycInt cycint_from_json(const Json& j);

Json to_json(const counting::DiagonalVariety& v);
Json to_json(const zeta::LocalFactor& lf);
zeta::LocalFactor local_factor_from_json(const Json& j);

std::string rational_string(const cft::Rational& r);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& os) const;
  // Columns padded to their widest cell.
  void write_text(std::ostream& os) const;
};

}  // namespace cyarith::cli
