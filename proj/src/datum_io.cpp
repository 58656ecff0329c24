#include "hopfforge/datum_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace hopfforge {

namespace {

struct RawEntry {
  std::string section;
  std::string key;
  std::string value;
  int line;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw input_error("datum line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<RawEntry> tokenize(std::istream& in) {
  std::vector<RawEntry> entries;
  std::string section;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') fail(lineno, "malformed section header");
      section = t.substr(1, t.size() - 2);
      if (section != "group" && section != "scalars" && section != "vertices" &&
          section != "parameters")
        fail(lineno, "unknown section [" + section + "]");
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos) fail(lineno, "expected key = value");
    if (section.empty()) fail(lineno, "key before any section");
    entries.push_back({section, trim(t.substr(0, eq)), trim(t.substr(eq + 1)), lineno});
  }
  return entries;
}

long parse_int(const std::string& v, int line) {
  try {
    size_t used = 0;
    long n = std::stol(v, &used);
    if (used != v.size()) fail(line, "trailing characters in integer '" + v + "'");
    return n;
  } catch (const input_error&) {
    throw;
  } catch (...) {
    fail(line, "not an integer: '" + v + "'");
  }
}

std::vector<uint32_t> parse_int_list(const std::string& v, int line) {
  std::vector<uint32_t> out;
  std::stringstream ss(v);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    long n = parse_int(trim(piece), line);
    if (n < 0) fail(line, "negative entry in list");
    out.push_back((uint32_t)n);
  }
  if (out.empty()) fail(line, "empty list");
  return out;
}

}  // namespace

PointedDatum parse_datum(std::istream& in) {
  auto entries = tokenize(in);

  PointedDatum d;
  bool have_factors = false, have_conductor = false, have_theta = false;
  std::map<uint32_t, std::pair<std::string, int>> g_raw, chi_raw, n_raw, mu_raw;
  std::map<std::pair<uint32_t, uint32_t>, std::pair<std::string, int>> lambda_raw;

  auto vertex_index = [](const std::string& key, size_t dot, int line) -> uint32_t {
    const std::string tail = key.substr(dot + 1);
    if (tail.empty()) fail(line, "missing vertex index in key '" + key + "'");
    for (char ch : tail)
      if (!isdigit((unsigned char)ch)) fail(line, "bad vertex index in key '" + key + "'");
    long i = std::stol(tail);
    if (i < 1) fail(line, "vertex indices are 1-based");
    return (uint32_t)i;
  };

  for (const auto& e : entries) {
    if (e.section == "group") {
      if (e.key == "invariant_factors") {
        d.group = FiniteAbelianGroup(parse_int_list(e.value, e.line));
        have_factors = true;
      } else {
        fail(e.line, "unknown key '" + e.key + "' in [group]");
      }
    } else if (e.section == "scalars") {
      if (e.key == "conductor") {
        long L = parse_int(e.value, e.line);
        if (L < 1) fail(e.line, "conductor must be >= 1");
        d.conductor = (uint32_t)L;
        have_conductor = true;
      } else {
        fail(e.line, "unknown key '" + e.key + "' in [scalars]");
      }
    } else if (e.section == "vertices") {
      if (e.key == "theta") {
        long t = parse_int(e.value, e.line);
        if (t < 1) fail(e.line, "theta must be >= 1");
        d.theta = (uint32_t)t;
        have_theta = true;
      } else if (e.key.rfind("g.", 0) == 0) {
        g_raw[vertex_index(e.key, 1, e.line)] = {e.value, e.line};
      } else if (e.key.rfind("chi.", 0) == 0) {
        chi_raw[vertex_index(e.key, 3, e.line)] = {e.value, e.line};
      } else if (e.key.rfind("N.", 0) == 0) {
        n_raw[vertex_index(e.key, 1, e.line)] = {e.value, e.line};
      } else {
        fail(e.line, "unknown key '" + e.key + "' in [vertices]");
      }
    } else {  // parameters
      if (e.key.rfind("mu.", 0) == 0) {
        mu_raw[vertex_index(e.key, 2, e.line)] = {e.value, e.line};
      } else if (e.key.rfind("lambda.", 0) == 0) {
        std::string tail = e.key.substr(7);
        size_t dot = tail.find('.');
        if (dot == std::string::npos) fail(e.line, "lambda keys look like lambda.i.j");
        uint32_t i = vertex_index("x." + tail.substr(0, dot), 1, e.line);
        uint32_t j = vertex_index("x." + tail.substr(dot + 1), 1, e.line);
        if (i >= j) fail(e.line, "lambda.i.j requires i < j");
        lambda_raw[{i, j}] = {e.value, e.line};
      } else {
        fail(e.line, "unknown key '" + e.key + "' in [parameters]");
      }
    }
  }

  if (!have_factors) throw input_error("datum: missing [group] invariant_factors");
  if (!have_conductor) throw input_error("datum: missing [scalars] conductor");
  if (!have_theta) throw input_error("datum: missing [vertices] theta");
  for (uint32_t m : d.group.factors())
    if (d.conductor % m != 0)
      throw input_error("datum: conductor " + std::to_string(d.conductor) +
                        " not divisible by invariant factor " + std::to_string(m));

  d.g.resize(d.theta);
  d.chi.resize(d.theta);
  d.mu.assign(d.theta, Cyc(0));
  for (uint32_t i = 1; i <= d.theta; ++i) {
    auto git = g_raw.find(i);
    if (git == g_raw.end()) throw input_error("datum: missing g." + std::to_string(i));
    auto vec = parse_int_list(git->second.first, git->second.second);
    if (vec.size() != d.group.rank()) fail(git->second.second, "g." + std::to_string(i) + " has wrong length");
    for (size_t j = 0; j < vec.size(); ++j)
      if (vec[j] >= d.group.factors()[j])
        fail(git->second.second, "g." + std::to_string(i) + " component " + std::to_string(j + 1) +
                                     " must lie in [0, m_j)");
    d.g[i - 1] = vec;

    auto cit = chi_raw.find(i);
    if (cit == chi_raw.end()) throw input_error("datum: missing chi." + std::to_string(i));
    auto cvec = parse_int_list(cit->second.first, cit->second.second);
    if (cvec.size() != d.group.rank())
      fail(cit->second.second, "chi." + std::to_string(i) + " has wrong length");
    for (size_t j = 0; j < cvec.size(); ++j)
      if (cvec[j] >= d.group.factors()[j])
        fail(cit->second.second, "chi." + std::to_string(i) + " component " + std::to_string(j + 1) +
                                     " must lie in [0, m_j): character values are z^(c_j L/m_j)");
    d.chi[i - 1].c = cvec;
  }
  for (const auto& [i, val] : g_raw)
    if (i > d.theta) fail(val.second, "g." + std::to_string(i) + " exceeds theta");
  for (const auto& [i, val] : chi_raw)
    if (i > d.theta) fail(val.second, "chi." + std::to_string(i) + " exceeds theta");

  d.refresh_orders();

  for (const auto& [i, val] : n_raw) {
    if (i > d.theta) fail(val.second, "N." + std::to_string(i) + " exceeds theta");
    long n = parse_int(val.first, val.second);
    if (n != (long)d.N[i - 1])
      fail(val.second, "declared N." + std::to_string(i) + " = " + val.first +
                           " but recomputed order of q_ii is " + std::to_string(d.N[i - 1]));
  }

  for (const auto& [i, val] : mu_raw) {
    if (i > d.theta) fail(val.second, "mu." + std::to_string(i) + " exceeds theta");
    d.mu[i - 1] = parse_scalar(val.first, d.conductor);
  }
  for (const auto& [key, val] : lambda_raw) {
    if (key.second > d.theta) fail(val.second, "lambda index exceeds theta");
    Cyc v = parse_scalar(val.first, d.conductor);
    if (!v.is_zero()) d.lambda[{key.first - 1, key.second - 1}] = v;
  }
  return d;
}

PointedDatum parse_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open datum file: " + path);
  return parse_datum(in);
}

PointedDatum parse_datum_text(const std::string& text) {
  std::istringstream in(text);
  return parse_datum(in);
}

std::string write_datum_text(const PointedDatum& d) {
  std::ostringstream out;
  out << "[group]\ninvariant_factors = ";
  for (size_t j = 0; j < d.group.rank(); ++j)
    out << (j ? "," : "") << d.group.factors()[j];
  out << "\n[scalars]\nconductor = " << d.conductor << "\n[vertices]\ntheta = " << d.theta << "\n";
  for (uint32_t i = 0; i < d.theta; ++i) {
    out << "g." << i + 1 << " = ";
    for (size_t j = 0; j < d.group.rank(); ++j) out << (j ? "," : "") << d.g[i][j];
    out << "\nchi." << i + 1 << " = ";
    for (size_t j = 0; j < d.group.rank(); ++j) out << (j ? "," : "") << d.chi[i].c[j];
    out << "\n";
  }
  out << "[parameters]\n";
  for (uint32_t i = 0; i < d.theta; ++i)
    if (!d.mu[i].is_zero()) out << "mu." << i + 1 << " = " << print_scalar(d.mu[i]) << "\n";
  for (const auto& [key, v] : d.lambda)
    if (!v.is_zero())
      out << "lambda." << key.first + 1 << "." << key.second + 1 << " = " << print_scalar(v) << "\n";
  return out.str();
}

std::string datum_hash(const PointedDatum& d) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : d.canonical_serialization()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace hopfforge
