#include "fixtures.hpp"

#include <fstream>
#include <sstream>

#include "tq/dsl.hpp"
#include "tq/error.hpp"

namespace tq::testing {

std::string fixture_path(const std::string& name) { return std::string(TQ_FIXTURE_DIR) + "/" + name + ".tq"; }

ThreadQuiver fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw Error(ErrorKind::InvalidArgument, "missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_tq(ss.str());
}

std::vector<std::string> all_fixtures() {
  return {"a2",       "square",       "thread_z",      "thread_3",    "thread_empty",
          "thread_1", "thread_empty2", "figure_left", "ainf_rad2",   "zigzag"};
}

std::vector<std::string> chain_fixtures() {
  return {"thread_z", "thread_3", "thread_empty", "thread_1", "thread_empty2"};
}

std::vector<std::string> dualizing_fixtures() { return {"thread_z", "thread_3", "figure_left", "a2", "square"}; }

std::vector<std::string> thread_quiver_fixtures() {
  return {"a2", "square", "thread_z", "thread_3", "thread_empty", "thread_1", "thread_empty2", "figure_left"};
}

std::vector<std::string> relation_free_fixtures() {
  return {"a2", "thread_z", "thread_3", "thread_empty", "thread_1", "thread_empty2", "figure_left"};
}

namespace {

Window from_tq(const ThreadQuiver& tq, const std::vector<std::pair<std::string, std::uint8_t>>& cuts) {
  Quiver q = underlying_quiver(tq);
  std::vector<std::uint8_t> c(q.vertex_count(), 0);
  for (const auto& [v, f] : cuts) c[q.vertex_index(v)] = f;
  return make_window(q, underlying_relations(tq, q), c);
}

}  // namespace

Window zigzag_window() { return from_tq(fixture("zigzag"), {{"b3_0", kCutAfter}}); }

Window ainf_window(int n) {
  std::ostringstream s;
  s << "vertex";
  for (int k = 1; k <= n; ++k) s << " v" << k;
  s << "\n";
  for (int k = 1; k < n; ++k) s << "arrow a" << k << ": v" << k << " -> v" << k + 1 << "\n";
  for (int k = 1; k + 1 < n; ++k) s << "relation a" << k + 1 << "*a" << k << " = 0\n";
  return from_tq(parse_tq(s.str()), {{"v1", kCutBefore}, {"v" + std::to_string(n), kCutAfter}});
}

Window not_locally_finite_window(int d) {
  std::ostringstream s;
  s << "vertex X Y";
  for (int j = d; j >= 0; --j) s << " m" << j;
  s << "\narrow y: X -> Y\n";
  for (int j = d; j >= 0; --j) s << "arrow x" << j << ": X -> m" << j << "\n";
  for (int j = d; j > 0; --j) s << "arrow c" << j << ": m" << j << " -> m" << j - 1 << "\n";
  for (int j = d; j > 0; --j) s << "relation c" << j << "*x" << j << " = 0\n";
  return from_tq(parse_tq(s.str()), {{"m" + std::to_string(d), kCutBefore}});
}

}  // namespace tq::testing
