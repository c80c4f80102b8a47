#pragma once

// JSON wire formats shared by the CLI and external consumers. Matrices are
// arrays of rows; every entry is {re_num, re_den, im_num, im_den} with
// arbitrary-precision values carried as decimal strings.

#include <string>

#include "json.hpp"

#include "cupkernel/hermitian.hpp"

namespace cupkernel {

inline nlohmann::ordered_json to_json(const GaussianRational& x) {
  return {{"re_num", x.re.get_num().get_str()},
          {"re_den", x.re.get_den().get_str()},
          {"im_num", x.im.get_num().get_str()},
          {"im_den", x.im.get_den().get_str()}};
}

inline nlohmann::ordered_json to_json(const HermitianMatrix& a) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (unsigned i = 0; i < a.size(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (unsigned j = 0; j < a.size(); ++j) row.push_back(to_json(a.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline GaussianRational gaussian_from_json(const nlohmann::json& j) {
  auto rat = [&](const char* num, const char* den) {
    mpq_class q(mpz_class(j.at(num).get<std::string>()),
                mpz_class(j.at(den).get<std::string>()));
    q.canonicalize();
    return q;
  };
  return {rat("re_num", "re_den"), rat("im_num", "im_den")};
}

inline HermitianMatrix matrix_from_json(const nlohmann::json& j) {
  unsigned n = static_cast<unsigned>(j.size());
  ComplexMatrix m(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) m.at(i, k) = gaussian_from_json(j.at(i).at(k));
  return HermitianMatrix(std::move(m));
}

}  // namespace cupkernel
