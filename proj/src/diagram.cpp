#include <sstream>

#include "schubsing/bruhat.hpp"
#include "schubsing/cli.hpp"
#include "schubsing/error.hpp"

namespace schubsing::cli {

namespace {

constexpr int kCell = 24;

void require_below(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size() || !bruhat_leq(x, w)) {
    throw PreconditionError("diagram: " + format_one_line(x) + " is not below " + format_one_line(w));
  }
}

const char* glyph(bool in_w, bool in_x) {
  if (in_w && in_x) return "⊙";  // coincident
  if (in_w) return "∘";
  if (in_x) return "●";
  return nullptr;
}

char shade(int d) { return d <= 0 ? ' ' : d == 1 ? '.' : ':'; }

}  // namespace

std::string diagram_ascii(const Permutation& x, const Permutation& w, bool annotate) {
  require_below(x, w);
  const DiffTable d(x, w);
  const int n = w.size();
  std::ostringstream s;
  for (int p = 1; p <= n; ++p) {
    s << '|';
    for (int q = 1; q <= n; ++q) {
      const char bg = shade(d(p, q));
      const char* g = glyph(w(p) == q, x(p) == q);
      s << bg;
      if (g) {
        s << g;
      } else {
        s << bg;
      }
      if (annotate) {
        s << d(p, q);
      } else {
        s << bg;
      }
    }
    s << "|\n";
  }
  return s.str();
}

std::string diagram_svg(const Permutation& x, const Permutation& w, bool annotate) {
  require_below(x, w);
  const DiffTable d(x, w);
  const int n = w.size();
  const int size = n * kCell;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
    << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      const int v = d(p, q);
      const char* fill = v <= 0 ? "#ffffff" : v == 1 ? "#d3d3d3" : "#8f8f8f";
      s << "<rect x=\"" << (q - 1) * kCell << "\" y=\"" << (p - 1) * kCell << "\" width=\"" << kCell
        << "\" height=\"" << kCell << "\" fill=\"" << fill << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    }
  }
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= n; ++q) {
      const int cx = (q - 1) * kCell + kCell / 2;
      const int cy = (p - 1) * kCell + kCell / 2;
      const bool in_w = w(p) == q;
      const bool in_x = x(p) == q;
      if (in_w) {
        s << "<circle cx=\"" << cx << "\" cy=\"" << cy
          << "\" r=\"7\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
      }
      if (in_x) {
        s << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << (in_w ? 3 : 6)
          << "\" fill=\"#000000\"/>\n";
      }
      if (annotate) {
        s << "<text x=\"" << (q - 1) * kCell + 2 << "\" y=\"" << (p - 1) * kCell + 8
          << "\" font-size=\"7\" font-family=\"monospace\">" << d(p, q) << "</text>\n";
      }
    }
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace schubsing::cli
