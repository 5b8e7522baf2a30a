#include "slicekit/chart.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slicekit {

namespace {

constexpr int kColumnWidth = 150;
constexpr int kLineHeight = 18;
constexpr int kMargin = 40;
constexpr int kHeader = 40;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_chart(const EMTower& t, const std::string& title) {
  const SubgroupLattice& lat = t.base().lattice();
  const std::vector<long long> degrees = t.slice_degrees();

  std::vector<std::vector<std::string>> columns;
  std::size_t tallest = 0;
  for (long long k : degrees) {
    std::vector<std::string> lines;
    const MackeyFunctor& s = t.slice(k);
    for (const auto& cls : lat.classes()) {
      const int h = cls.front();
      if (!s.level(h).is_zero()) lines.push_back(lat.label(h) + ": " + s.level(h).invariants().to_string());
    }
    tallest = std::max(tallest, lines.size());
    columns.push_back(std::move(lines));
  }

  const int width = 2 * kMargin + std::max<int>(1, static_cast<int>(degrees.size())) * kColumnWidth;
  const int plot_height = std::max<int>(1, static_cast<int>(tallest)) * kLineHeight + kLineHeight;
  const int axis_y = kHeader + plot_height;
  const int height = axis_y + kMargin;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  std::string heading = title.empty() ? "slices (shift " + std::to_string(t.shift()) + ", " + to_string(t.variant()) + ")"
                                      : title;
  os << "<text x=\"" << kMargin << "\" y=\"" << kHeader / 2 + 5
     << "\" font-family=\"monospace\" font-size=\"14\">" << escape(heading) << "</text>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << axis_y << "\" x2=\"" << width - kMargin << "\" y2=\"" << axis_y
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kHeader << "\" x2=\"" << kMargin << "\" y2=\"" << axis_y
     << "\" stroke=\"black\"/>\n";

  for (std::size_t c = 0; c < degrees.size(); ++c) {
    const int x = kMargin + static_cast<int>(c) * kColumnWidth + 8;
    os << "<g class=\"slice\" data-degree=\"" << degrees[c] << "\">\n";
    os << "<text x=\"" << x << "\" y=\"" << axis_y + 20 << "\" font-family=\"monospace\" font-size=\"12\">"
       << degrees[c] << "</text>\n";
    for (std::size_t i = 0; i < columns[c].size(); ++i) {
      const int y = axis_y - 8 - static_cast<int>(i) * kLineHeight;
      os << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"12\">"
         << escape(columns[c][i]) << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_chart(const EMTower& t, const std::string& path, const std::string& title) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << render_chart(t, title);
  if (!out.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace slicekit
