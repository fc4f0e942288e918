#include <algorithm>
#include <array>
#include <unordered_map>

#include "pseudospec/diagnostics.hpp"
#include "pseudospec/errors.hpp"

namespace pseudospec::diagnostics {
namespace {

using Point = std::array<double, 2>;

struct Segment {
  std::size_t a;  // edge ids
  std::size_t b;
};

}  // namespace

std::string PlaneSpec::name() const {
  static constexpr char axes[] = {'x', 'y', 'z'};
  if (normal > 2) throw StructuralError("plane normal must be 0, 1 or 2");
  return std::string(1, axes[normal]) + std::to_string(index);
}

std::vector<Polyline> contour_lines(std::span<const double> values, std::span<const double> a,
                                    std::span<const double> b, double level) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (values.size() != na * nb) throw StructuralError("contour values do not match the coordinate axes");
  std::vector<Polyline> out;
  if (na < 2 || nb < 2) return out;

  auto value = [&](std::size_t i, std::size_t j) { return values[j * na + i]; };
  auto inside = [&](std::size_t i, std::size_t j) { return value(i, j) >= level; };
  // Edge ids: 2*(j*na+i) for (i,j)-(i+1,j), 2*(j*na+i)+1 for (i,j)-(i,j+1).
  auto h_edge = [&](std::size_t i, std::size_t j) { return 2 * (j * na + i); };
  auto v_edge = [&](std::size_t i, std::size_t j) { return 2 * (j * na + i) + 1; };

  auto edge_point = [&](std::size_t id) -> Point {
    const std::size_t cell = id / 2;
    const std::size_t i = cell % na;
    const std::size_t j = cell / na;
    const std::size_t i2 = (id % 2 == 0) ? i + 1 : i;
    const std::size_t j2 = (id % 2 == 0) ? j : j + 1;
    const double v0 = value(i, j);
    const double v1 = value(i2, j2);
    const double s = v1 == v0 ? 0.5 : (level - v0) / (v1 - v0);
    return {a[i] + s * (a[i2] - a[i]), b[j] + s * (b[j2] - b[j])};
  };

  std::vector<Segment> segments;
  for (std::size_t j = 0; j + 1 < nb; ++j) {
    for (std::size_t i = 0; i + 1 < na; ++i) {
      const int code = (inside(i, j) ? 1 : 0) | (inside(i + 1, j) ? 2 : 0) | (inside(i + 1, j + 1) ? 4 : 0) |
                       (inside(i, j + 1) ? 8 : 0);
      if (code == 0 || code == 15) continue;
      const std::size_t bottom = h_edge(i, j), top = h_edge(i, j + 1);
      const std::size_t left = v_edge(i, j), right = v_edge(i + 1, j);
      if (code == 5 || code == 10) {
        const double centre = 0.25 * (value(i, j) + value(i + 1, j) + value(i + 1, j + 1) + value(i, j + 1));
        const bool joined = centre >= level;
        if ((code == 5) == joined) {
          segments.push_back({bottom, right});
          segments.push_back({top, left});
        } else {
          segments.push_back({left, bottom});
          segments.push_back({right, top});
        }
        continue;
      }
      // Exactly two crossed edges.
      std::size_t crossed[2];
      int count = 0;
      if (((code & 1) != 0) != ((code & 2) != 0)) crossed[count++] = bottom;
      if (((code & 2) != 0) != ((code & 4) != 0)) crossed[count++] = right;
      if (((code & 4) != 0) != ((code & 8) != 0)) crossed[count++] = top;
      if (((code & 8) != 0) != ((code & 1) != 0)) crossed[count++] = left;
      segments.push_back({crossed[0], crossed[1]});
    }
  }

  std::unordered_map<std::size_t, std::vector<std::size_t>> by_edge;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    by_edge[segments[s].a].push_back(s);
    by_edge[segments[s].b].push_back(s);
  }
  std::vector<bool> used(segments.size(), false);

  // Follows unused segments from `edge`, appending the edges visited.
  auto walk = [&](std::size_t edge, std::vector<std::size_t>& chain) {
    for (;;) {
      std::size_t next = segments.size();
      for (std::size_t s : by_edge[edge])
        if (!used[s]) {
          next = s;
          break;
        }
      if (next == segments.size()) return;
      used[next] = true;
      edge = segments[next].a == edge ? segments[next].b : segments[next].a;
      chain.push_back(edge);
    }
  };

  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (used[s]) continue;
    used[s] = true;
    std::vector<std::size_t> forward{segments[s].a, segments[s].b};
    walk(segments[s].b, forward);
    std::vector<std::size_t> backward;
    if (forward.back() != forward.front()) walk(segments[s].a, backward);

    std::vector<std::size_t> chain(backward.rbegin(), backward.rend());
    chain.insert(chain.end(), forward.begin(), forward.end());

    Polyline line;
    line.level = level;
    line.closed = chain.size() > 2 && chain.front() == chain.back();
    for (std::size_t e : chain) {
      const Point p = edge_point(e);
      if (line.points.empty() || line.points.back() != p) line.points.push_back(p);
    }
    if (line.points.size() >= 2) out.push_back(std::move(line));
  }
  return out;
}

std::vector<Polyline> contour_slice(const PhysicalField& field, std::size_t component, const PlaneSpec& plane,
                                    std::span<const double> levels) {
  const SpectralGrid& grid = field.grid();
  if (grid.rank() != 3) throw StructuralError("contour slices need a 3D grid");
  if (component >= field.components()) throw StructuralError("contour component out of range");
  if (plane.normal > 2 || plane.index >= grid.samples(plane.normal))
    throw StructuralError("contour plane outside the grid");

  std::size_t in_plane[2];
  std::size_t m = 0;
  for (std::size_t d = 0; d < 3; ++d)
    if (d != plane.normal) in_plane[m++] = d;
  const std::size_t ax = in_plane[0], bx = in_plane[1];
  const std::size_t na = grid.samples(ax), nb = grid.samples(bx);

  std::vector<double> a(na), b(nb), slice(na * nb);
  for (std::size_t i = 0; i < na; ++i) a[i] = grid.coordinate(ax, i);
  for (std::size_t j = 0; j < nb; ++j) b[j] = grid.coordinate(bx, j);
  const auto data = field.component(component);
  const std::size_t n1 = grid.samples(1), n2 = grid.samples(2);
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t i = 0; i < na; ++i) {
      std::size_t idx[3];
      idx[plane.normal] = plane.index;
      idx[ax] = i;
      idx[bx] = j;
      slice[j * na + i] = data[(idx[0] * n1 + idx[1]) * n2 + idx[2]];
    }

  std::vector<Polyline> out;
  for (double level : levels) {
    auto lines = contour_lines(slice, a, b, level);
    std::move(lines.begin(), lines.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace pseudospec::diagnostics
