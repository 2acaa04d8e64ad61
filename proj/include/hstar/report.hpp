#pragma once

// ComputationReport and its three renderings. JSON is canonical; CSV and
// LaTeX are projections of the same record.

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hstar/integer.hpp"
#include "hstar/poly.hpp"
#include "hstar/realroot.hpp"
#include "hstar/simplex.hpp"

namespace hstar {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, latex };

struct Properties {
  std::optional<std::size_t> symmetric_center;
  std::optional<bool> unimodal;     // unset for negative coefficients
  std::optional<bool> log_concave;  // unset for negative coefficients
  bool real_rooted = false;
  std::optional<std::vector<Integer>> gamma;
  std::optional<Integer> t_set_size;
};

struct ComputationReport {
  std::vector<Integer> q;
  Integer Q = 0;
  IntPolynomial hstar;
  IntPolynomial local_hstar;
  Properties properties;
  std::string method = "formula";
  bool oracle_checked = false;
  std::optional<double> runtime_ms;
};

/// Properties of p. A requested center is honoured as given; otherwise the
/// center low_degree + degree is tried. The zero polynomial gets no center.
inline Properties analyse(const IntPolynomial& p, std::optional<std::size_t> center = std::nullopt) {
  Properties out;
  if (!p.is_zero()) {
    const std::size_t m = center.value_or(p.low_degree() + static_cast<std::size_t>(p.degree()));
    if (is_symmetric(p, m)) {
      out.symmetric_center = m;
      out.gamma = gamma_expansion(p, m).gammas;
    }
  }
  if (p.has_nonnegative_coefficients()) {
    out.unimodal = is_unimodal(p);
    out.log_concave = is_log_concave(p);
  }
  out.real_rooted = p.is_zero() || is_real_rooted(p);
  return out;
}

namespace detail {

inline Json json_integer(const Integer& x) {
  static const Integer kExact = (Integer(1) << 53) - 1;
  if (abs(x) <= kExact) return Json(x.convert_to<long long>());
  return Json(x.str());
}

inline Json json_list(const std::vector<Integer>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(json_integer(x));
  return a;
}

inline std::vector<Integer> coefficient_list(const IntPolynomial& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

template <typename T>
Json json_optional(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline std::string joined(const std::vector<Integer>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i].str();
  }
  return s;
}

inline std::string csv_optional_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

inline std::string latex_poly(const IntPolynomial& p) {
  std::string s = p.to_string();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    // z^10 -> z^{10}
    if (s[i] == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace detail

inline Json properties_json(const Properties& p) {
  Json j;
  j["symmetric_center"] = detail::json_optional(p.symmetric_center);
  j["unimodal"] = detail::json_optional(p.unimodal);
  j["log_concave"] = detail::json_optional(p.log_concave);
  j["real_rooted"] = p.real_rooted;
  j["gamma"] = p.gamma ? detail::json_list(*p.gamma) : Json(nullptr);
  j["t_set_size"] = p.t_set_size ? detail::json_integer(*p.t_set_size) : Json(nullptr);
  return j;
}

inline Json to_json(const ComputationReport& r) {
  Json j;
  j["q"] = detail::json_list(r.q);
  j["Q"] = detail::json_integer(r.Q);
  j["hstar"] = detail::json_list(detail::coefficient_list(r.hstar));
  j["local_hstar"] = detail::json_list(detail::coefficient_list(r.local_hstar));
  j["properties"] = properties_json(r.properties);
  Json prov;
  prov["method"] = r.method;
  prov["oracle_checked"] = r.oracle_checked;
  prov["runtime_ms"] = detail::json_optional(r.runtime_ms);
  j["provenance"] = std::move(prov);
  return j;
}

inline std::string render(const ComputationReport& r, Format f) {
  std::ostringstream os;
  const auto& p = r.properties;
  switch (f) {
    case Format::json: os << to_json(r).dump(2) << '\n'; break;
    case Format::csv:
      os << "q,Q,hstar,local_hstar,symmetric_center,unimodal,log_concave,real_rooted,gamma,t_set_size,"
            "method,oracle_checked,runtime_ms\n";
      os << detail::joined(r.q, ";") << ',' << r.Q << ',' << detail::joined(detail::coefficient_list(r.hstar), ";")
         << ',' << detail::joined(detail::coefficient_list(r.local_hstar), ";") << ','
         << (p.symmetric_center ? std::to_string(*p.symmetric_center) : "") << ','
         << detail::csv_optional_bool(p.unimodal) << ',' << detail::csv_optional_bool(p.log_concave) << ','
         << (p.real_rooted ? "true" : "false") << ',' << (p.gamma ? detail::joined(*p.gamma, ";") : "") << ','
         << (p.t_set_size ? p.t_set_size->str() : "") << ',' << r.method << ','
         << (r.oracle_checked ? "true" : "false") << ',' << (r.runtime_ms ? std::to_string(*r.runtime_ms) : "")
         << '\n';
      break;
    case Format::latex:
      os << "\\begin{tabular}{ll}\n";
      os << "$q$ & $(" << detail::joined(r.q, ", ") << ")$ \\\\\n";
      os << "$Q$ & $" << r.Q << "$ \\\\\n";
      os << "$h^*$ & $" << detail::latex_poly(r.hstar) << "$ \\\\\n";
      os << "$\\ell^*$ & $" << detail::latex_poly(r.local_hstar) << "$ \\\\\n";
      if (p.gamma) os << "$\\gamma$ & $(" << detail::joined(*p.gamma, ", ") << ")$ \\\\\n";
      os << "\\end{tabular}\n";
      break;
  }
  return os.str();
}

/// Properties of a bare polynomial, for `props`.
inline std::string render_props(const IntPolynomial& poly, const Properties& p, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      Json j;
      j["poly"] = detail::json_list(detail::coefficient_list(poly));
      j["properties"] = properties_json(p);
      os << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "poly,symmetric_center,unimodal,log_concave,real_rooted,gamma\n";
      os << detail::joined(detail::coefficient_list(poly), ";") << ','
         << (p.symmetric_center ? std::to_string(*p.symmetric_center) : "") << ','
         << detail::csv_optional_bool(p.unimodal) << ',' << detail::csv_optional_bool(p.log_concave) << ','
         << (p.real_rooted ? "true" : "false") << ',' << (p.gamma ? detail::joined(*p.gamma, ";") : "") << '\n';
      break;
    case Format::latex:
      os << "$" << detail::latex_poly(poly) << "$";
      if (p.gamma) os << ", $\\gamma = (" << detail::joined(*p.gamma, ", ") << ")$";
      os << '\n';
      break;
  }
  return os.str();
}

/// Coefficients of z^1, ..., z^n for each factoradic row n = 1..count.
inline std::vector<std::vector<Integer>> triangle_coefficients(const std::vector<IntPolynomial>& rows) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t n = 1; n <= rows.size(); ++n) {
    std::vector<Integer> row;
    for (std::size_t k = 1; k <= n; ++k) row.push_back(rows[n - 1].coeff(k));
    out.push_back(std::move(row));
  }
  return out;
}

inline std::string render_triangle(const std::vector<std::vector<Integer>>& rows, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      Json j;
      j["family"] = "factoradic";
      Json a = Json::array();
      for (const auto& row : rows) a.push_back(detail::json_list(row));
      j["rows"] = std::move(a);
      os << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      for (const auto& row : rows) os << detail::joined(row, ",") << '\n';
      break;
    case Format::latex: {
      // Centred triangle: row n occupies columns (k - n) .. (k + n - 2), step 2.
      const std::size_t k = rows.size();
      const std::size_t cols = k ? 2 * k - 1 : 1;
      os << "\\begin{tabular}{*{" << cols << "}{c}}\n";
      for (std::size_t n = 1; n <= k; ++n) {
        std::vector<std::string> cells(cols);
        for (std::size_t i = 0; i < n; ++i) cells[k - n + 2 * i] = rows[n - 1][i].str();
        for (std::size_t c = 0; c < cols; ++c) os << (c ? " & " : "") << cells[c];
        os << " \\\\\n";
      }
      os << "\\end{tabular}\n";
      break;
    }
  }
  return os.str();
}

}  // namespace hstar
