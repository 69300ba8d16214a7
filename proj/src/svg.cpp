#include "outerdraw/svg.hpp"

#include <sstream>

namespace outerdraw {

namespace {

constexpr int kMargin = 40;
constexpr int kStep = 30;

int col_x(std::size_t c) { return kMargin + kStep * static_cast<int>(c); }
int row_y(int pos) { return kMargin + kStep * pos; }

}  // namespace

std::string render_svg(const WiringDiagram& d) {
  d.validate();
  const std::size_t cols = d.events.size() + 2;
  // rows[i][c]: position of curve i at column c
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(d.n) + 1);
  std::vector<std::size_t> vertex_col(static_cast<std::size_t>(d.n) + 1, 0);
  std::vector<int> order(static_cast<std::size_t>(d.n));
  for (int p = 0; p < d.n; ++p) order[p] = p + 1;
  auto snapshot = [&] {
    for (int p = 0; p < d.n; ++p) rows[order[p]].push_back(p);
  };
  snapshot();
  for (std::size_t e = 0; e < d.events.size(); ++e) {
    const auto& ev = d.events[e];
    if (ev.kind == WiringEvent::Kind::Swap)
      std::swap(order[ev.value], order[ev.value + 1]);
    else
      vertex_col[ev.value] = e + 1;
    snapshot();
  }
  snapshot();

  const int width = col_x(cols - 1) + kMargin;
  const int height = row_y(d.n - 1) + kMargin;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"8\" y=\"" << height / 2 << "\" font-size=\"14\">p1</text>\n"
     << "<text x=\"" << width - 24 << "\" y=\"" << height / 2 << "\" font-size=\"14\">p2</text>\n";
  auto polyline = [&](int curve, std::size_t from, std::size_t to, const char* color) {
    os << "<polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"2\" stroke-linejoin=\"round\" stroke-linecap=\"round\" points=\"";
    for (std::size_t c = from; c <= to; ++c) os << (c == from ? "" : " ") << col_x(c) << ',' << row_y(rows[curve][c]);
    os << "\"/>\n";
  };
  for (int i = 1; i <= d.n; ++i) {
    const std::size_t vc = vertex_col[i];
    polyline(i, 0, vc, "#d62728");
    polyline(i, vc, cols - 1, "#1f77b4");
    os << "<circle cx=\"" << col_x(vc) << "\" cy=\"" << row_y(rows[i][vc]) << "\" r=\"4\" fill=\"black\"/>\n"
       << "<text x=\"" << col_x(vc) - 4 << "\" y=\"" << row_y(rows[i][vc]) - 8 << "\" font-size=\"11\">" << i
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace outerdraw
