#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tq/dot.hpp"
#include "tq/dsl.hpp"
#include "tq/error.hpp"
#include "tq/resolution.hpp"
#include "tq/serre.hpp"
#include "tq/threads.hpp"

namespace tq::cli {

namespace {

struct Options {
  std::string file;
  int depth = 2;
  int max_len = 6;
  int min_thread_len = 3;
  std::string field = "q";
  bool skip_boundary = true;
  bool window = false;
  std::string x, y;
  int degree = 1;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Field parse_field(const std::string& s) {
  if (s == "q") return Field::rationals();
  if (s.rfind("fp:", 0) == 0) {
    try {
      return Field::prime(std::stoull(s.substr(3)));
    } catch (const std::logic_error&) {
    }
  }
  throw UsageError("--field expects q or fp:<prime>, got '" + s + "'");
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int vertex(const Category& c, const std::string& name) {
  for (int v = 0; v < c.size(); ++v)
    if (c.name(v) == name) return v;
  throw UsageError("no vertex '" + name + "' in the window");
}

// "P(v)", "I(v)", "S(v)"
Rep module_arg(CategoryPtr c, const std::string& s) {
  if (s.size() < 4 || s[1] != '(' || s.back() != ')') throw UsageError("expected P(v), I(v) or S(v), got '" + s + "'");
  const int v = vertex(*c, s.substr(2, s.size() - 3));
  switch (s[0]) {
    case 'P': return std_module(c, v, ModuleKind::Projective);
    case 'I': return std_module(c, v, ModuleKind::Injective);
    case 'S': return std_module(c, v, ModuleKind::Simple);
  }
  throw UsageError("expected P(v), I(v) or S(v), got '" + s + "'");
}

std::string join(const Category& c, const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) out += (out.empty() ? "" : " ") + c.name(v);
  return out;
}

Report check_cmd(const ThreadQuiver& tq, const Options& o) {
  Report r;
  r.check = "check";
  Window w = expand(tq, o.depth);
  r.add("strongly locally finite", "yes", is_strongly_locally_finite(underlying_quiver(tq)) ? "yes" : "no");
  r.add("window vertices", std::to_string(w.quiver.vertex_count()), std::to_string(w.quiver.vertex_count()));
  r.add("reparse", "identical", parse_tq(serialize(tq)) == tq ? "identical" : "different");
  return r;
}

Report expand_cmd(const ThreadQuiver& tq, const Options& o) {
  Report r;
  r.check = "expand";
  Window w = expand(tq, o.depth);
  std::size_t nb = 0;
  for (bool b : w.boundary) nb += b;
  const std::string nv = std::to_string(w.quiver.vertex_count());
  const std::string na = std::to_string(w.quiver.arrow_count());
  r.add("vertices", nv, nv);
  r.add("arrows", na, na);
  r.add("boundary", std::to_string(nb), std::to_string(nb));
  for (int v = 0; v < w.quiver.vertex_count(); ++v) {
    const std::string kind = w.boundary[v] ? "boundary" : "interior";
    r.add("vertex " + w.quiver.vertex(v), kind, kind);
  }
  return r;
}

Report threads_cmd(const ThreadQuiver& tq, const Options& o) {
  Window w = expand(tq, o.depth);
  CategoryPtr c = w.category();
  Report r = thread_hom_check(c);
  r.check = "threads";
  ThreadAnalysis a = thread_analysis(c);
  std::vector<int> tv;
  for (int v = 0; v < c->size(); ++v)
    if (a.thread_vertex[v]) tv.push_back(v);
  const std::string s = join(*c, tv);
  r.items.insert(r.items.begin(), {"thread vertices", s, s, "", true});
  for (std::size_t k = 0; k < a.maximal.size(); ++k) {
    const std::string m = join(*c, a.maximal[k]);
    r.items.insert(r.items.begin() + 1 + k, {"maximal thread " + std::to_string(k), m, m, "", true});
  }
  return r;
}

Report extract_cmd(const ThreadQuiver& tq, const Options& o) {
  Report r;
  r.check = "extract";
  const std::string s = serialize(extract_threadquiver(expand(tq, o.depth), o.min_thread_len));
  r.add("thread quiver", s, s);
  return r;
}

Report roundtrip_cmd(const ThreadQuiver& tq, const Options& o) {
  Report r;
  r.check = "roundtrip";
  Window w = expand(tq, o.depth);
  ThreadQuiver back = extract_threadquiver(w, o.min_thread_len);
  r.add("window iso", "isomorphic", window_iso(expand(back, 0), w) ? "isomorphic" : "not isomorphic");
  r.add("reparse", "identical", parse_tq(serialize(tq)) == tq ? "identical" : "different");
  return r;
}

Report dispatch(const std::string& cmd, const ThreadQuiver& tq, const Options& o) {
  if (cmd == "check") return check_cmd(tq, o);
  if (cmd == "normalize") {
    Report r;
    r.check = "normalize";
    const std::string s = serialize(normalize(tq));
    r.add("thread quiver", s, s);
    return r;
  }
  if (cmd == "expand") return expand_cmd(tq, o);
  if (cmd == "hom" || cmd == "ext") {
    CategoryPtr c = expand(tq, o.depth).category();
    Report r;
    r.check = cmd;
    if (cmd == "hom") {
      const std::string d = std::to_string(c->dim(vertex(*c, o.x), vertex(*c, o.y)));
      r.add("hom(" + o.x + ", " + o.y + ")", d, d);
    } else {
      const std::string d = std::to_string(ext_dim(o.degree, module_arg(c, o.x), module_arg(c, o.y), o.max_len));
      r.add("Ext^" + std::to_string(o.degree) + "(" + o.x + ", " + o.y + ")", d, d);
    }
    return r;
  }
  if (cmd == "serre-check") {
    CategoryPtr c = expand(tq, o.depth).category();
    return check_serre(interior_probes(c), o.max_len, o.skip_boundary);
  }
  if (cmd == "dualizing-check") return check_dualizing(expand(tq, o.depth).category());
  if (cmd == "threads") return threads_cmd(tq, o);
  if (cmd == "extract") return extract_cmd(tq, o);
  return roundtrip_cmd(tq, o);
}

}  // namespace

std::string report_json(const Report& r) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& i : r.items) {
    nlohmann::json j = {{"subject", i.subject}, {"expected", i.expected}, {"actual", i.actual}};
    if (!i.location.empty()) j["location"] = i.location;
    items.push_back(std::move(j));
  }
  nlohmann::json j = {{"check", r.check}, {"status", r.passed() ? "pass" : "fail"}, {"items", std::move(items)}};
  return j.dump(2);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"thread quiver toolkit", "tqtool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--depth", o.depth, "truncation depth")->check(CLI::NonNegativeNumber);
  app.add_option("--max-len", o.max_len, "resolution length bound")->check(CLI::NonNegativeNumber);
  app.add_option("--min-thread-len", o.min_thread_len, "shortest thread to contract")->check(CLI::PositiveNumber);
  app.add_option("--field", o.field, "q or fp:<prime>");
  app.add_flag("--skip-boundary,!--no-skip-boundary", o.skip_boundary, "skip pairs resolved through the boundary");

  const std::vector<std::pair<std::string, std::string>> cmds = {
      {"check", "parse and validate"},
      {"normalize", "separate threads from standard arrows"},
      {"expand", "window at --depth"},
      {"dot", "Graphviz output"},
      {"hom", "dim hom(X, Y) between window vertices"},
      {"ext", "dim Ext^i(M, N) for M, N among P(v), I(v), S(v)"},
      {"serre-check", "Serre duality on interior probes"},
      {"dualizing-check", "presentations and pseudo(co)kernels"},
      {"threads", "thread vertices and hom along threads"},
      {"extract", "contract maximal threads"},
      {"roundtrip", "extract then expand again"},
  };
  for (const auto& [name, help] : cmds) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "thread quiver source, - for stdin")->required();
    if (name == "hom" || name == "ext") {
      sub->add_option("x", o.x)->required();
      sub->add_option("y", o.y)->required();
    }
    if (name == "ext") sub->add_option("--degree", o.degree, "i")->check(CLI::NonNegativeNumber);
    if (name == "dot") sub->add_flag("--window", o.window, "draw expand(tq, depth) instead");
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    FieldScope scope(parse_field(o.field));
    ThreadQuiver tq = parse_tq(read_source(o.file));
    if (cmd == "dot") {
      out << (o.window ? emit_dot(expand(tq, o.depth)) : emit_dot(tq));
      return kPass;
    }
    Report r = dispatch(cmd, tq, o);
    out << report_json(r) << '\n';
    return r.passed() ? kPass : kFail;
  } catch (const UsageError& e) {
    err << "tqtool: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "tqtool: " << o.file << ":" << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::UnknownVertex:
      case ErrorKind::DuplicateName:
      case ErrorKind::NestedThreadLabel:
      case ErrorKind::InvalidArgument:
      case ErrorKind::TooLarge:
        err << "tqtool: " << e.what() << '\n';
        return kUsage;
      default: {
        Report r;
        r.check = cmd;
        r.fail("computation", "completes", std::string(to_string(e.kind())));
        out << report_json(r) << '\n';
        return kFail;
      }
    }
  } catch (const std::exception& e) {
    err << "tqtool: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace tq::cli
