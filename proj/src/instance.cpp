#include "bandlab/instance.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace bandlab {

ParseError::ParseError(const std::string& source, int l, int c, const std::string& msg)
    : InputError(source + ":" + std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}

namespace {

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

// Trims spaces/tabs; `col` (1-based) is advanced past leading blanks.
std::string_view trim(std::string_view s, int& col) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++col;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Token {
  std::string text;
  int column;
};

std::vector<Token> split_tokens(const std::string& value, int column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < value.size()) {
    while (i < value.size() && (value[i] == ' ' || value[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < value.size() && value[i] != ' ' && value[i] != '\t') ++i;
    if (i > start) out.push_back({value.substr(start, i - start), column + int(start)});
  }
  return out;
}

}  // namespace

RawDocument parse_sections(std::string_view text, const std::string& source, const std::string& expected_magic) {
  RawDocument doc;
  doc.source = source;
  int line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    int col = 1;
    line = trim(line, col);
    if (line.empty()) continue;

    if (!have_header) {
      auto sp = line.find_first_of(" \t");
      std::string magic(line.substr(0, sp));
      if (magic != expected_magic) {
        throw ParseError(source, line_no, col, "expected header '" + expected_magic + " <version>'");
      }
      if (sp == std::string_view::npos) throw ParseError(source, line_no, col + int(line.size()), "missing version");
      int vcol = col + int(sp);
      std::string_view ver = trim(line.substr(sp), vcol);
      if (ver != "1") throw ParseError(source, line_no, vcol, "unsupported version '" + std::string(ver) + "'");
      doc.magic = magic;
      doc.version = 1;
      have_header = true;
      continue;
    }

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(source, line_no, col + int(line.size()) - 1, "expected ']'");
      int icol = col + 1;
      std::string_view inner = trim(line.substr(1, line.size() - 2), icol);
      RawSection sec;
      sec.line = line_no;
      sec.column = col;
      auto sp = inner.find_first_of(" \t");
      sec.kind = std::string(inner.substr(0, sp));
      if (!is_identifier(sec.kind)) throw ParseError(source, line_no, icol, "malformed section name");
      if (sp != std::string_view::npos) {
        int ncol = icol + int(sp);
        std::string_view name = trim(inner.substr(sp), ncol);
        if (!is_identifier(name)) throw ParseError(source, line_no, ncol, "malformed section label '" + std::string(name) + "'");
        sec.name = std::string(name);
      }
      doc.sections.push_back(std::move(sec));
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, line_no, col, "expected 'key = value'");
    if (doc.sections.empty()) throw ParseError(source, line_no, col, "entry outside of any section");
    int kcol = col;
    std::string_view key = trim(line.substr(0, eq), kcol);
    if (key.empty() || key.find_first_of(" \t") != std::string_view::npos) {
      throw ParseError(source, line_no, kcol, "malformed key");
    }
    int vcol = col + int(eq) + 1;
    std::string_view value = trim(line.substr(eq + 1), vcol);
    if (value.empty()) throw ParseError(source, line_no, vcol, "missing value");
    doc.sections.back().entries.push_back({std::string(key), std::string(value), line_no, kcol, vcol});
  }
  if (!have_header) throw ParseError(source, line_no, 1, "empty file: expected header '" + expected_magic + " 1'");
  return doc;
}

RVec parse_vector(const std::string& source, const RawEntry& e) {
  RVec v;
  for (const auto& t : split_tokens(e.value, e.value_column)) {
    try {
      v.push_back(parse_rat(t.text));
    } catch (const InputError& err) {
      throw ParseError(source, e.line, t.column, err.what());
    }
  }
  return v;
}

namespace {

std::size_t parse_count(const std::string& source, const RawEntry& e, long lo, long hi) {
  RVec v = parse_vector(source, e);
  if (v.size() != 1 || v[0].get_den() != 1) {
    throw ParseError(source, e.line, e.value_column, "expected a single integer");
  }
  const Rat& r = v[0];
  if (r < lo || r > hi) {
    throw ParseError(source, e.line, e.value_column,
                     "value out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return std::size_t(r.get_num().get_ui());
}

std::vector<std::size_t> parse_indices(const std::string& source, const RawEntry& e) {
  std::vector<std::size_t> out;
  for (const auto& t : split_tokens(e.value, e.value_column)) {
    RawEntry one = e;
    one.value = t.text;
    one.value_column = t.column;
    out.push_back(parse_count(source, one, 1, 1000000) - 1);
  }
  return out;
}

// Rejects unknown and repeated single-valued keys.
void check_keys(const std::string& source, const RawSection& sec, const std::set<std::string>& single,
                const std::set<std::string>& repeatable) {
  std::set<std::string> seen;
  for (const auto& e : sec.entries) {
    if (repeatable.count(e.key)) continue;
    if (!single.count(e.key)) {
      throw ParseError(source, e.line, e.key_column, "unknown key '" + e.key + "' in [" + sec.kind + "]");
    }
    if (!seen.insert(e.key).second) throw ParseError(source, e.line, e.key_column, "duplicate key '" + e.key + "'");
  }
}

const RawEntry* find(const RawSection& sec, const std::string& key) {
  for (const auto& e : sec.entries) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

const RawEntry& require(const std::string& source, const RawSection& sec, const std::string& key) {
  if (const RawEntry* e = find(sec, key)) return *e;
  throw ParseError(source, sec.line, sec.column, "[" + sec.kind + "] requires key '" + key + "'");
}

void require_name(const std::string& source, const RawSection& sec) {
  if (sec.name.empty()) throw ParseError(source, sec.line, sec.column, "[" + sec.kind + "] requires a label, e.g. [" + sec.kind + " I]");
}

void parse_space(Instance& inst, const RawSection& sec) {
  const std::string& src = inst.source;
  if (!sec.name.empty()) throw ParseError(src, sec.line, sec.column, "[space] takes no label");
  for (const auto& e : sec.entries) {
    static const std::set<std::string> known{"kind", "n", "m", "seed", "name", "vector"};
    if (!known.count(e.key)) throw ParseError(src, e.line, e.key_column, "unknown key '" + e.key + "' in [space]");
  }
  const RawEntry& kind = require(src, sec, "kind");
  if (kind.value == "rays" || kind.value == "inequalities") {
    check_keys(src, sec, {"kind", "n"}, {"vector"});
    inst.cone.kind = kind.value == "rays" ? ConeSpec::Kind::rays : ConeSpec::Kind::inequalities;
    inst.cone.n = parse_count(src, require(src, sec, "n"), 1, 64);
    for (const auto& e : sec.entries) {
      if (e.key != "vector") continue;
      RVec v = parse_vector(src, e);
      if (v.size() != inst.cone.n) {
        throw ParseError(src, e.line, e.value_column,
                         "expected " + std::to_string(inst.cone.n) + " entries, got " + std::to_string(v.size()));
      }
      inst.cone.vectors.push_back(std::move(v));
    }
  } else if (kind.value == "random") {
    check_keys(src, sec, {"kind", "seed", "n", "m"}, {});
    Instance::RandomParams p;
    p.seed = parse_count(src, require(src, sec, "seed"), 0, 1L << 40);
    p.n = parse_count(src, require(src, sec, "n"), 0, 64);
    p.m = parse_count(src, require(src, sec, "m"), 0, 256);
    inst.random = p;
  } else if (kind.value == "example") {
    check_keys(src, sec, {"kind", "name"}, {});
    inst.space_kind = Instance::SpaceKind::example;
    inst.example = require(src, sec, "name").value;
  } else {
    throw ParseError(src, kind.line, kind.value_column,
                     "unknown space kind '" + kind.value + "' (rays, inequalities, random, example)");
  }
}

}  // namespace

Instance parse_instance(std::string_view text, const std::string& source) {
  RawDocument doc = parse_sections(text, source, "bandlab-instance");
  Instance inst;
  inst.source = source;
  inst.version = doc.version;
  bool have_space = false, have_expected = false;
  std::set<std::string> names;
  auto claim = [&](const RawSection& sec) {
    require_name(source, sec);
    if (!names.insert(sec.name).second) {
      throw ParseError(source, sec.line, sec.column, "label '" + sec.name + "' already used");
    }
  };
  for (const auto& sec : doc.sections) {
    if (sec.kind == "space") {
      if (have_space) throw ParseError(source, sec.line, sec.column, "duplicate [space] section");
      parse_space(inst, sec);
      have_space = true;
    } else if (sec.kind == "subspace") {
      claim(sec);
      check_keys(source, sec, {"cover_band", "rays"}, {"vector"});
      Instance::SubspaceDecl d;
      d.name = sec.name;
      d.line = sec.line;
      for (const auto& e : sec.entries) {
        if (e.key == "vector") d.vectors.push_back(parse_vector(source, e));
        if (e.key == "cover_band") d.cover_band = parse_indices(source, e);
        if (e.key == "rays") d.rays = parse_indices(source, e);
      }
      int kinds = (d.vectors.empty() ? 0 : 1) + (d.cover_band ? 1 : 0) + (d.rays ? 1 : 0);
      if (kinds > 1) {
        throw ParseError(source, sec.line, sec.column, "use exactly one of vector, cover_band, rays");
      }
      inst.subspaces.push_back(std::move(d));
    } else if (sec.kind == "element") {
      claim(sec);
      check_keys(source, sec, {"value", "ray"}, {});
      Instance::ElementDecl d;
      d.name = sec.name;
      d.line = sec.line;
      if (const RawEntry* e = find(sec, "value")) d.value = parse_vector(source, *e);
      if (const RawEntry* e = find(sec, "ray")) d.ray = parse_count(source, *e, 1, 1000000) - 1;
      if (d.value.has_value() == d.ray.has_value()) {
        throw ParseError(source, sec.line, sec.column, "[element] needs exactly one of value, ray");
      }
      inst.elements.push_back(std::move(d));
    } else if (sec.kind == "query") {
      claim(sec);
      check_keys(source, sec, {"predicate", "args"}, {});
      Instance::Query q;
      q.id = sec.name;
      q.line = sec.line;
      q.predicate = require(source, sec, "predicate").value;
      if (const RawEntry* e = find(sec, "args")) {
        for (const auto& t : split_tokens(e->value, e->value_column)) q.args.push_back(t.text);
      }
      inst.queries.push_back(std::move(q));
    } else if (sec.kind == "expected") {
      if (have_expected) throw ParseError(source, sec.line, sec.column, "duplicate [expected] section");
      have_expected = true;
      std::set<std::string> seen;
      for (const auto& e : sec.entries) {
        if (!seen.insert(e.key).second) throw ParseError(source, e.line, e.key_column, "duplicate key '" + e.key + "'");
        Instance::Expectation x{e.key, Verdict::unknown, e.line, e.key_column};
        if (e.value == "yes") x.verdict = Verdict::yes;
        else if (e.value == "no") x.verdict = Verdict::no;
        else if (e.value == "unknown") x.verdict = Verdict::unknown;
        else throw ParseError(source, e.line, e.value_column, "expected yes, no or unknown");
        inst.expected.push_back(std::move(x));
      }
    } else {
      throw ParseError(source, sec.line, sec.column, "unknown section [" + sec.kind + "]");
    }
  }
  if (!have_space) throw ParseError(source, 1, 1, "missing [space] section");
  if (inst.space_kind == Instance::SpaceKind::example &&
      (!inst.subspaces.empty() || !inst.elements.empty() || !inst.queries.empty())) {
    throw ParseError(source, 1, 1, "example instances accept only [space] and [expected]");
  }
  return inst;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_text_file(path), path); }

std::string format_space_section(const ConeSpec& spec) {
  std::ostringstream out;
  out << "[space]\n";
  out << "kind = " << (spec.kind == ConeSpec::Kind::rays ? "rays" : "inequalities") << "\n";
  out << "n = " << spec.n << "\n";
  for (const auto& v : spec.vectors) {
    out << "vector =";
    for (const auto& x : v) out << " " << to_string(x);
    out << "\n";
  }
  return out.str();
}

}  // namespace bandlab
