#include "tcand/parse.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "tcand/errors.hpp"

namespace tcand {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

void check_name(const std::string& name, int line_num) {
  if (name == "->" || name == "_" || name.back() == ':')
    throw ParseError(line_num, "'" + name + "' is not a valid attribute name");
}

}  // namespace

int NamedInstance::id_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

NamedInstance parse_instance(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  auto intern = [&](const std::string& name, int line_num) {
    check_name(name, line_num);
    auto it = ids.find(name);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(names.size());
    names.push_back(name);
    ids.emplace(name, id);
    return id;
  };

  struct RawLine {
    std::vector<int> lhs, rhs;
  };
  std::vector<RawLine> fd_lines;
  std::vector<std::pair<std::string, int>> target_names;  // name, line
  int rounds = -1;

  std::string line;
  for (int line_num = 1; std::getline(in, line); ++line_num) {
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "target:") {
      for (size_t i = 1; i < toks.size(); ++i) target_names.emplace_back(toks[i], line_num);
      continue;
    }
    if (toks[0] == "rounds:") {
      if (toks.size() != 2) throw ParseError(line_num, "rounds: expects one integer");
      if (rounds != -1) throw ParseError(line_num, "duplicate rounds: line");
      try {
        size_t pos = 0;
        rounds = std::stoi(toks[1], &pos);
        if (pos != toks[1].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(line_num, "'" + toks[1] + "' is not an integer");
      }
      continue;
    }

    size_t arrow = toks.size();
    for (size_t i = 0; i < toks.size(); ++i)
      if (toks[i] == "->") {
        if (arrow != toks.size()) throw ParseError(line_num, "more than one '->'");
        arrow = i;
      }
    if (arrow == toks.size())
      throw ParseError(line_num, "expected a dependency line containing '->'");
    if (arrow + 1 == toks.size()) throw ParseError(line_num, "empty right side");

    RawLine rl;
    bool empty_lhs = arrow == 1 && toks[0] == "_";
    if (arrow == 0) throw ParseError(line_num, "missing left side (use _ for empty)");
    if (!empty_lhs)
      for (size_t i = 0; i < arrow; ++i) rl.lhs.push_back(intern(toks[i], line_num));
    for (size_t i = arrow + 1; i < toks.size(); ++i) rl.rhs.push_back(intern(toks[i], line_num));
    fd_lines.push_back(std::move(rl));
  }

  int n = static_cast<int>(names.size());
  std::vector<RawFD> raw;
  raw.reserve(fd_lines.size());
  for (const RawLine& rl : fd_lines) {
    RawFD r{AttrSet(n), AttrSet(n)};
    for (int i : rl.lhs) r.lhs.set(i);
    for (int i : rl.rhs) r.rhs.set(i);
    raw.push_back(std::move(r));
  }

  NamedInstance ni;
  ni.names = std::move(names);
  ni.instance.fds = normalize(n, raw);
  ni.instance.targets = AttrSet(n);
  for (const auto& [name, line_num] : target_names) {
    auto it = ids.find(name);
    if (it == ids.end())
      throw PreconditionError("line " + std::to_string(line_num) + ": unknown attribute '" +
                              name + "' in target line");
    ni.instance.targets.set(it->second);
  }
  if (rounds == -1) rounds = n;
  if (n == 0 ? rounds != 0 : (rounds < 1 || rounds > n))
    throw PreconditionError("rounds " + std::to_string(rounds) + " out of range [1, " +
                            std::to_string(n) + "]");
  ni.instance.rounds = rounds;
  return ni;
}

NamedInstance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::string format_instance(const NamedInstance& ni) {
  const Instance& inst = ni.instance;
  std::ostringstream out;
  out << "# " << inst.n() << " attributes, " << inst.fds.size() << " dependencies\n";
  for (int i = 0; i < inst.n(); ++i) out << ni.names[i] << " -> " << ni.names[i] << "\n";
  for (const FD& fd : inst.fds.fds) {
    if (fd.lhs.empty()) {
      out << "_";
    } else {
      bool first = true;
      fd.lhs.for_each([&](int i) {
        out << (first ? "" : " ") << ni.names[i];
        first = false;
      });
    }
    out << " -> " << ni.names[fd.rhs] << "\n";
  }
  if (inst.n() > 0) out << "rounds: " << inst.rounds << "\n";
  out << "target:";
  inst.targets.for_each([&](int i) { out << " " << ni.names[i]; });
  out << "\n";
  return out.str();
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = "a" + std::to_string(i);
  return names;
}

int NamedRbsc::id_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

NamedRbsc parse_rbsc(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  std::vector<bool> is_red;
  std::vector<std::vector<int>> sets;

  std::string line;
  for (int line_num = 1; std::getline(in, line); ++line_num) {
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] == "red:" || toks[0] == "blue:") {
      bool red = toks[0] == "red:";
      for (size_t i = 1; i < toks.size(); ++i) {
        check_name(toks[i], line_num);
        if (ids.count(toks[i]))
          throw ParseError(line_num, "element '" + toks[i] + "' declared twice");
        ids.emplace(toks[i], static_cast<int>(names.size()));
        names.push_back(toks[i]);
        is_red.push_back(red);
      }
    } else if (toks[0] == "set:") {
      std::vector<int> s;
      for (size_t i = 1; i < toks.size(); ++i) {
        auto it = ids.find(toks[i]);
        if (it == ids.end())
          throw PreconditionError("line " + std::to_string(line_num) + ": unknown element '" +
                                  toks[i] + "' in set line");
        s.push_back(it->second);
      }
      sets.push_back(std::move(s));
    } else {
      throw ParseError(line_num, "expected red:, blue:, or set:");
    }
  }

  NamedRbsc nr;
  int u = static_cast<int>(names.size());
  nr.names = std::move(names);
  nr.rbsc.num_elements = u;
  nr.rbsc.reds = AttrSet(u);
  nr.rbsc.blues = AttrSet(u);
  for (int i = 0; i < u; ++i) (is_red[i] ? nr.rbsc.reds : nr.rbsc.blues).set(i);
  for (const auto& s : sets) {
    AttrSet set(u);
    for (int i : s) set.set(i);
    nr.rbsc.sets.push_back(std::move(set));
  }
  return nr;
}

NamedRbsc parse_rbsc_text(const std::string& text) {
  std::istringstream in(text);
  return parse_rbsc(in);
}

std::string format_rbsc(const NamedRbsc& nr) {
  std::ostringstream out;
  out << "red:";
  nr.rbsc.reds.for_each([&](int i) { out << " " << nr.names[i]; });
  out << "\nblue:";
  nr.rbsc.blues.for_each([&](int i) { out << " " << nr.names[i]; });
  out << "\n";
  for (const AttrSet& s : nr.rbsc.sets) {
    out << "set:";
    s.for_each([&](int i) { out << " " << nr.names[i]; });
    out << "\n";
  }
  return out.str();
}

bool looks_like_rbsc(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    return toks[0] == "red:" || toks[0] == "blue:" || toks[0] == "set:";
  }
  return false;
}

}  // namespace tcand
