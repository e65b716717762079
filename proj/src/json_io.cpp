#include "bstar/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bstar/errors.hpp"
#include "bstar/parse.hpp"

namespace bstar {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

ordered_json btilde_json(const FactoredPoly& b) {
  ordered_json out = ordered_json::array();
  for (const auto& f : b.factors())
    out.push_back({{"root", f.root.str()}, {"mult", f.mult}});
  return out;
}

ordered_json decomposition_json(const std::vector<DecompositionTerm>& dec,
                                const std::string& param) {
  ordered_json out = ordered_json::array();
  for (const auto& term : dec)
    out.push_back({{"operator", term.op.str(param)},
                   {"generator", term.generator}});
  return out;
}

FactoredPoly btilde_from(const ordered_json& arr) {
  if (!arr.is_array()) throw SyntaxError("btilde must be a list", 0);
  FactoredPoly out;
  for (const auto& item : arr) {
    const Rational root = parse_rational(item.at("root").get<std::string>());
    const int mult = item.at("mult").get<int>();
    if (mult < 1) throw SyntaxError("btilde multiplicity must be positive", 0);
    out.insert(root, mult);
  }
  return out;
}

std::vector<DecompositionTerm> decomposition_from(
    const ordered_json& arr, const std::vector<std::string>& variables,
    const std::string& param, std::size_t generator_count) {
  if (!arr.is_array()) throw SyntaxError("decomposition must be a list", 0);
  std::vector<DecompositionTerm> out;
  for (const auto& item : arr) {
    const long idx = item.at("generator").get<long>();
    if (idx < 0 || static_cast<std::size_t>(idx) >= generator_count)
      throw SyntaxError("generator index out of range", 0);
    out.push_back({parse_operator(item.at("operator").get<std::string>(),
                                  variables, param),
                   static_cast<std::size_t>(idx)});
  }
  return out;
}

std::vector<std::string> variables_from(const ordered_json& j) {
  if (!j.is_array() || j.empty())
    throw SyntaxError("variables must be a nonempty list", 0);
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw SyntaxError(std::string("invalid JSON: ") + e.what(), 0);
  }
}

Certificate bs_from_json(const ordered_json& j) {
  const auto variables = variables_from(j.at("variables"));
  return Certificate::make(
      parse_poly(j.at("function").get<std::string>(), variables), variables,
      btilde_from(j.at("btilde")),
      decomposition_from(j.at("decomposition"), variables, "s",
                         variables.size() + 1));
}

EulerCertificate euler_from_json_obj(const ordered_json& j) {
  const auto variables = variables_from(j.at("variables"));
  return EulerCertificate::make(
      parse_poly(j.at("function").get<std::string>(), variables), variables,
      parse_operator(j.at("euler_field").get<std::string>(), variables, "t"),
      parse_operator(j.at("q_operator").get<std::string>(), variables, "t"),
      btilde_from(j.at("btilde")),
      decomposition_from(j.at("decomposition"), variables, "t",
                         variables.size()));
}

AnyCertificate dispatch(const ordered_json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw SyntaxError("unsupported schema_version", 0);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "bs-certificate") return bs_from_json(j);
    if (kind == "euler-certificate") return euler_from_json_obj(j);
    throw SyntaxError("unknown certificate kind '" + kind + "'", 0);
  } catch (const ordered_json::exception& e) {
    throw SyntaxError(std::string("certificate schema: ") + e.what(), 0);
  }
}

}  // namespace

std::string certificate_to_json(const Certificate& c) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "bs-certificate";
  j["function"] = to_string(c.f());
  j["variables"] = c.variables();
  j["btilde"] = btilde_json(c.btilde());
  j["decomposition"] = decomposition_json(c.decomposition(), "s");
  return j.dump(2) + "\n";
}

std::string certificate_to_json(const EulerCertificate& e) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "euler-certificate";
  j["function"] = to_string(e.g());
  j["variables"] = e.variables();
  j["btilde"] = btilde_json(e.ctilde());
  j["euler_field"] = e.chi().str("t");
  j["q_operator"] = e.q().str("t");
  j["decomposition"] = decomposition_json(e.q_decomposition(), "t");
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  AnyCertificate any = dispatch(parse_json(text));
  if (auto* c = std::get_if<Certificate>(&any)) return std::move(*c);
  throw SyntaxError("expected a bs-certificate", 0);
}

EulerCertificate euler_from_json(const std::string& text) {
  AnyCertificate any = dispatch(parse_json(text));
  if (auto* e = std::get_if<EulerCertificate>(&any)) return std::move(*e);
  throw SyntaxError("expected an euler-certificate", 0);
}

AnyCertificate any_certificate_from_json(const std::string& text) {
  return dispatch(parse_json(text));
}

void save_certificate_file(const std::string& path, const AnyCertificate& c) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  std::visit([&out](const auto& cert) { out << certificate_to_json(cert); }, c);
  if (!out.good()) throw Error("write to '" + path + "' failed");
}

AnyCertificate load_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return any_certificate_from_json(buf.str());
}

}  // namespace bstar
