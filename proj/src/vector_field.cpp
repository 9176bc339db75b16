#include "bautin/vector_field.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace bautin {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int parse_small_int(const std::string& tok, int line, const char* what) {
  if (tok.empty()) throw ParseError(line, std::string("missing ") + what);
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  }
  if (pos != tok.size() || v < 0 || v > 100000)
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  return static_cast<int>(v);
}

template <class S>
VectorField<S> parse_with(std::string_view text, const S& zero,
                          const std::function<S(const std::string&)>& coeff) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int degree = -1;
  std::vector<std::tuple<char, int, int, S>> terms;
  std::set<std::tuple<char, int, int>> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto toks = split_ws(raw);
    if (toks.empty()) continue;
    if (degree < 0) {
      if (toks[0] != "n" || toks.size() != 2)
        throw ParseError(line_no, "expected 'n <degree>' as the first line");
      degree = parse_small_int(toks[1], line_no, "degree");
      if (degree < 2) throw ParseError(line_no, "degree must be at least 2");
      continue;
    }
    if (toks[0] == "n") throw ParseError(line_no, "degree declared twice");
    if ((toks[0] != "F" && toks[0] != "G") || toks.size() != 4)
      throw ParseError(line_no, "expected 'F <i> <j> <coeff>' or 'G <i> <j> <coeff>'");
    const char comp = toks[0][0];
    const int i = parse_small_int(toks[1], line_no, "exponent");
    const int j = parse_small_int(toks[2], line_no, "exponent");
    if (i + j < 2) throw ParseError(line_no, "term degree below 2 (linear part is fixed)");
    if (i + j > degree)
      throw ParseError(line_no, "term degree " + std::to_string(i + j) + " exceeds n = " +
                                    std::to_string(degree));
    if (!seen.emplace(comp, i, j).second)
      throw ParseError(line_no, std::string("duplicate term ") + comp + " " + toks[1] + " " +
                                    toks[2]);
    try {
      terms.emplace_back(comp, i, j, coeff(toks[3]));
    } catch (const UsageError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (degree < 0) throw ParseError(0, "missing 'n <degree>' line");
  VectorField<S> vf(degree, zero);
  for (auto& [comp, i, j, c] : terms) (comp == 'F' ? vf.f(i, j) : vf.g(i, j)) = std::move(c);
  return vf;
}

template <class S>
std::string serialize_with(const VectorField<S>& vf,
                           const std::function<std::string(const S&)>& fmt) {
  std::ostringstream out;
  out << "n " << vf.degree() << "\n";
  for (int k = 2; k <= vf.degree(); ++k) {
    for (int i = k; i >= 0; --i) {
      if (!is_zero(vf.f(i, k - i))) out << "F " << i << " " << k - i << " " << fmt(vf.f(i, k - i)) << "\n";
    }
    for (int i = k; i >= 0; --i) {
      if (!is_zero(vf.g(i, k - i))) out << "G " << i << " " << k - i << " " << fmt(vf.g(i, k - i)) << "\n";
    }
  }
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

VectorField<Rational> parse_vector_field(std::string_view text) {
  return parse_with<Rational>(text, Rational(0),
                              [](const std::string& t) { return Rational::parse(t); });
}

VectorField<BigReal> parse_vector_field_real(std::string_view text, int digits) {
  return parse_with<BigReal>(text, BigReal(0, digits),
                             [digits](const std::string& t) { return BigReal::parse(t, digits); });
}

std::string serialize_vector_field(const VectorField<Rational>& vf) {
  return serialize_with<Rational>(vf, [](const Rational& r) { return r.str(); });
}

std::string serialize_vector_field(const VectorField<BigReal>& vf) {
  return serialize_with<BigReal>(vf, [](const BigReal& r) { return r.str(); });
}

VectorField<Rational> read_vector_field_file(const std::string& path) {
  return parse_vector_field(slurp(path));
}

VectorField<BigReal> read_vector_field_file_real(const std::string& path, int digits) {
  return parse_vector_field_real(slurp(path), digits);
}

VectorField<BigReal> to_bigreal(const VectorField<Rational>& vf, int digits) {
  return vf.map([digits](const Rational& q) { return BigReal(q, digits); });
}

}  // namespace bautin
