#include "quasichar/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "quasichar/errors.hpp"

namespace quasichar {

namespace {

using nlohmann::json;

bool is_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::vector<std::string> split_single_spaces(const std::string& line, std::size_t line_no) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t sp = line.find(' ', start);
    std::string tok = line.substr(start, sp == std::string::npos ? std::string::npos : sp - start);
    if (!is_integer_token(tok))
      throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
    out.push_back(std::move(tok));
    if (sp == std::string::npos) return out;
    start = sp + 1;
  }
}

BigInt parse_big(const json& v) {
  if (v.is_number_integer()) return BigInt(v.dump());
  if (v.is_string() && is_integer_token(v.get<std::string>())) return BigInt(v.get<std::string>());
  throw InputError("expected an integer or a decimal string, got " + v.dump());
}

std::uint64_t parse_positive(const json& v, const char* what) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw InputError(std::string(what) + " must be a positive integer");
  return v.get<std::uint64_t>();
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

IntMatrix parse_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t m = 0, n = 0;
  bool have_header = false;
  std::vector<BigInt> entries;
  std::size_t rows_read = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto toks = split_single_spaces(line, line_no);
    if (!have_header) {
      if (toks.size() != 2 || toks[0][0] == '-' || toks[1][0] == '-' || toks[0].size() > 9 ||
          toks[1].size() > 9)
        throw InputError("line " + std::to_string(line_no) + ": header must be \"m n\"");
      m = std::stoul(toks[0]);
      n = std::stoul(toks[1]);
      if (m == 0 || n == 0) throw InputError("matrix dimensions must be positive");
      have_header = true;
      continue;
    }
    if (rows_read == m) throw InputError("line " + std::to_string(line_no) + ": more than m rows");
    if (toks.size() != n)
      throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(n) +
                       " entries, got " + std::to_string(toks.size()));
    for (auto& t : toks) entries.emplace_back(t);
    ++rows_read;
  }
  if (!have_header) throw InputError("matrix file has no \"m n\" header");
  if (rows_read != m)
    throw InputError("expected " + std::to_string(m) + " rows, got " + std::to_string(rows_read));
  return IntMatrix(m, n, std::move(entries));
}

IntMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& s) {
  std::ostringstream os;
  os << s.rows() << ' ' << s.cols() << '\n';
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) os << (c ? " " : "") << s(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  return Arrangement(parse_matrix(in), path);
}

std::string to_json(const QuasiPolynomial& chi) {
  json cons = json::object();
  for (const auto& [d, p] : chi.constituents) {
    json coeffs = json::array();
    for (const auto& c : p.descending()) coeffs.push_back(c.get_str());
    cons[std::to_string(d)] = std::move(coeffs);
  }
  json doc = {{"m", chi.degree}, {"period", chi.period}, {"constituents", std::move(cons)}};
  return doc.dump(2);
}

QuasiPolynomial quasipoly_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("period") || !doc.contains("constituents"))
    throw InputError("quasi-polynomial JSON needs \"m\", \"period\" and \"constituents\"");
  QuasiPolynomial chi;
  if (!doc["m"].is_number_unsigned()) throw InputError("\"m\" must be a nonnegative integer");
  chi.degree = doc["m"].get<std::size_t>();
  chi.period = parse_positive(doc["period"], "\"period\"");
  if (!doc["constituents"].is_object()) throw InputError("\"constituents\" must be an object");
  for (const auto& [key, arr] : doc["constituents"].items()) {
    if (!is_integer_token(key) || key[0] == '-' || key.size() > 19)
      throw InputError("constituent key '" + key + "' is not a divisor");
    const std::uint64_t d = std::stoull(key);
    if (d == 0 || chi.period % d != 0) throw InputError("constituent key " + key + " does not divide the period");
    if (!arr.is_array() || arr.size() != chi.degree + 1)
      throw InputError("constituent " + key + " must list m + 1 coefficients");
    std::vector<BigInt> desc;
    for (const auto& c : arr) desc.push_back(parse_big(c));
    chi.constituents[d] = IntPolynomial::from_descending(desc);
  }
  for (auto d : divisors(chi.period))
    if (!chi.constituents.count(d)) throw InputError("missing constituent for divisor " + std::to_string(d));
  return chi;
}

std::string to_json(const RationalGF& gf) {
  json num = json::array();
  for (const auto& c : gf.numerator.coefficients()) num.push_back(c.get_str());
  json den = json::array();
  for (const auto& f : gf.denominator) den.push_back({f.a, f.b});
  json doc = {{"numerator", std::move(num)}, {"denominator", std::move(den)}};
  return doc.dump(2);
}

RationalGF gf_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("numerator") || !doc.contains("denominator") ||
      !doc["numerator"].is_array() || !doc["denominator"].is_array())
    throw InputError("generating function JSON needs \"numerator\" and \"denominator\" arrays");
  RationalGF gf;
  std::vector<BigInt> num;
  for (const auto& c : doc["numerator"]) num.push_back(parse_big(c));
  gf.numerator = IntPolynomial(std::move(num));
  for (const auto& f : doc["denominator"]) {
    if (!f.is_array() || f.size() != 2) throw InputError("denominator factors must be [a, b] pairs");
    gf.denominator.push_back({parse_positive(f[0], "a"), parse_positive(f[1], "b")});
  }
  return gf;
}

}  // namespace quasichar
