#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bandlab/polyspace.hpp"

namespace bandlab {

/// Malformed instance text; the message is prefixed "source:line:column: ".
class ParseError : public InputError {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& msg);
  int line, column;
};

/// One `key = value` line.
struct RawEntry {
  std::string key, value;
  int line = 0, key_column = 0, value_column = 0;
};

/// One `[kind]` or `[kind name]` section with its entries in file order.
struct RawSection {
  std::string kind, name;
  int line = 0, column = 0;
  std::vector<RawEntry> entries;
};

/// The line-oriented sectioned format shared by instance and falsify files:
///
///   bandlab-instance 1          first significant line: magic word, version
///   # comment                   '#' starts a comment anywhere on a line
///   [section optional_name]
///   key = value
struct RawDocument {
  std::string source;
  std::string magic;
  int version = 0;
  std::vector<RawSection> sections;
};

RawDocument parse_sections(std::string_view text, const std::string& source,
                           const std::string& expected_magic);

/// Whitespace-separated rational literals starting at the given column.
RVec parse_vector(const std::string& source, const RawEntry& e);

/// A parsed instance.
///
/// [space]      kind = rays | inequalities | random | example
///              n = <int>                        (rays, inequalities)
///              vector = <rationals>             (repeatable; rays, inequalities)
///              seed = <int>, n = <int>, m = <int>   (random)
///              name = <example name>            (example)
/// [subspace I] vector = <rationals>             (repeatable; spanning vectors)
///              cover_band = <1-based cover coordinates>
///              rays = <1-based extreme-ray indices>
/// [element x]  value = <rationals> | ray = <1-based index>
/// [query q]    predicate = <name>, args = <names>
/// [expected]   <key> = yes | no | unknown
struct Instance {
  enum class SpaceKind { polyhedral, example };
  struct RandomParams {
    std::uint64_t seed = 0;
    std::size_t n = 0, m = 0;
  };
  struct SubspaceDecl {
    std::string name;
    int line = 0;
    RMat vectors;
    std::optional<std::vector<std::size_t>> cover_band;  // 0-based
    std::optional<std::vector<std::size_t>> rays;        // 0-based
  };
  struct ElementDecl {
    std::string name;
    int line = 0;
    std::optional<RVec> value;
    std::optional<std::size_t> ray;  // 0-based
  };
  struct Query {
    std::string id, predicate;
    std::vector<std::string> args;
    int line = 0;
  };
  struct Expectation {
    std::string key;
    Verdict verdict = Verdict::unknown;
    int line = 0, column = 0;
  };

  std::string source;
  int version = 1;
  SpaceKind space_kind = SpaceKind::polyhedral;
  ConeSpec cone;
  std::optional<RandomParams> random;
  std::string example;
  std::vector<SubspaceDecl> subspaces;
  std::vector<ElementDecl> elements;
  std::vector<Query> queries;
  std::vector<Expectation> expected;
};

Instance parse_instance(std::string_view text, const std::string& source = "<input>");
Instance load_instance(const std::string& path);
std::string read_text_file(const std::string& path);

/// The cone spec as an instance [space] section (inequalities, canonical
/// rationals), used for golden files and archived fixture candidates.
std::string format_space_section(const ConeSpec& spec);

}  // namespace bandlab
