#include "knowforge/rdf/ntriples.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace knowforge::rdf {

std::string escape_literal(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size());
  for (const char ch : lexical) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

namespace {

struct TermFormatter {
  std::string operator()(const Iri& iri) const { return "<" + iri.str() + ">"; }
  std::string operator()(const BlankNode& node) const { return "_:" + node.label; }
  std::string operator()(const Literal& lit) const {
    std::string out = "\"" + escape_literal(lit.lexical) + "\"";
    if (lit.language) {
      out += "@" + *lit.language;
    } else if (lit.datatype != ns::xsd("string")) {
      out += "^^<" + lit.datatype.str() + ">";
    }
    return out;
  }
};

}  // namespace

std::string format_term(const Term& term) { return std::visit(TermFormatter{}, term); }

std::string format_triple(const Triple& triple) {
  return format_term(to_term(triple.subject)) + " " + format_term(triple.predicate) + " " +
         format_term(triple.object) + " .";
}

std::string to_ntriples(const Graph& graph) {
  std::vector<std::string> lines;
  lines.reserve(graph.triples.size());
  for (const auto& t : graph.triples) {
    lines.push_back(format_triple(t));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace knowforge::rdf
