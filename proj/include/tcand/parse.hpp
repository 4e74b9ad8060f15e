#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tcand/fd.hpp"
#include "tcand/redblue.hpp"

namespace tcand {

// Instance plus the external names of its attributes (id -> name).
struct NamedInstance {
  Instance instance;
  std::vector<std::string> names;

  int id_of(const std::string& name) const;  // -1 when unknown
};

// FD file format, one item per line:
//   a b -> c d        dependency (multi-attribute right sides are split)
//   _ -> c            dependency with empty left side
//   rounds: D         inference depth (default: number of attributes)
//   target: x y       target attributes (may repeat; union)
//   # comment         comments run to end of line
// Attribute names are introduced by appearing in a dependency line.
NamedInstance parse_instance(std::istream& in);
NamedInstance parse_instance_text(const std::string& text);

// Inverse of parse_instance: parsing the returned text reproduces the
// instance with identical ids. Attributes are declared in id order via
// self-dependencies, which the parser drops after interning the names.
std::string format_instance(const NamedInstance& ni);

// "a0", "a1", ... fallback names for instances built programmatically.
std::vector<std::string> default_names(int n);

// RBSC instance plus element names (id -> name).
struct NamedRbsc {
  RBSCInstance rbsc;
  std::vector<std::string> names;

  int id_of(const std::string& name) const;
};

// RBSC file format, one item per line:
//   red: r1 r2        red elements
//   blue: b1 b2       blue elements
//   set: r1 b1        one set per line, in cover-index order
NamedRbsc parse_rbsc(std::istream& in);
NamedRbsc parse_rbsc_text(const std::string& text);
std::string format_rbsc(const NamedRbsc& nr);

// Cheap format sniff: true when the text's first directive is red:/blue:/set:.
bool looks_like_rbsc(const std::string& text);

}  // namespace tcand
