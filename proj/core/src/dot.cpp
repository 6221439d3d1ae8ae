#include "tq/dot.hpp"

#include <sstream>

namespace tq {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emit_dot(const ThreadQuiver& tq) {
  std::ostringstream out;
  out << "digraph tq {\n";
  for (const auto& v : tq.vertices) out << "  " << quoted(v) << ";\n";
  for (const auto& a : tq.standard)
    out << "  " << quoted(a.src) << " -> " << quoted(a.tgt) << " [label=" << quoted(a.name) << "];\n";
  for (const auto& t : tq.threads)
    out << "  " << quoted(t.src) << " -> " << quoted(t.tgt) << " [style=dashed, label=" << quoted(t.label.str())
        << "];\n";
  out << "}\n";
  return out.str();
}

std::string emit_dot(const Window& w) {
  std::ostringstream out;
  out << "digraph window {\n";
  for (int v = 0; v < w.quiver.vertex_count(); ++v) {
    out << "  " << quoted(w.quiver.vertex(v));
    if (w.boundary[v]) out << " [style=dotted]";
    out << ";\n";
  }
  for (const auto& a : w.quiver.arrows())
    out << "  " << quoted(w.quiver.vertex(a.src)) << " -> " << quoted(w.quiver.vertex(a.tgt))
        << " [label=" << quoted(a.name) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace tq
