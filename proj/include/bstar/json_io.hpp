#pragma once

#include <string>
#include <variant>

#include "bstar/certificate.hpp"

namespace bstar {

using AnyCertificate = std::variant<Certificate, EulerCertificate>;

/// Certificates serialize to a flat JSON object: schema_version, kind
/// ("bs-certificate" | "euler-certificate"), function, variables, btilde as
/// a list of {root, mult}, decomposition as a list of {operator, generator},
/// and for the euler kind additionally euler_field and q_operator. All
/// polynomials and operators are grammar strings; euler-side operators use
/// the parameter t.
std::string certificate_to_json(const Certificate& c);
std::string certificate_to_json(const EulerCertificate& e);

/// Malformed JSON, schema violations, and unparsable strings all raise
/// SyntaxError (UndeclaredVariable / NonRationalRoot pass through).
Certificate certificate_from_json(const std::string& text);
EulerCertificate euler_from_json(const std::string& text);
AnyCertificate any_certificate_from_json(const std::string& text);

void save_certificate_file(const std::string& path, const AnyCertificate& c);
AnyCertificate load_certificate_file(const std::string& path);

}  // namespace bstar
