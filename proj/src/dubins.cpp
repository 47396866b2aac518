#include "dubins.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dubcov {

namespace {

constexpr double kNoPath = std::numeric_limits<double>::infinity();

struct WordParams {
  double t = kNoPath;
  double p = kNoPath;
  double q = kNoPath;
  double length() const { return t + p + q; }
};

// Tiny negatives and near-2*pi results are rounding noise from the word
// formulas; snapping them avoids spurious full-circle turn segments.
double mod2pi(double x) {
  double m = std::fmod(x, kTwoPi);
  if (m < 0.0) m += kTwoPi;
  if (m < 1e-9 || kTwoPi - m < 1e-9) m = 0.0;
  return m;
}

// Closed forms in normalized coordinates (unit turning radius, start at the
// origin heading alpha, goal at (d, 0) heading beta).

WordParams lsl(double d, double alpha, double beta) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double tmp = 2.0 + d * d - 2.0 * (ca * cb + sa * sb - d * (sa - sb));
  if (tmp < 0.0) return {};
  const double theta = std::atan2(cb - ca, d + sa - sb);
  return {mod2pi(-alpha + theta), std::sqrt(tmp), mod2pi(beta - theta)};
}

WordParams rsr(double d, double alpha, double beta) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double tmp = 2.0 + d * d - 2.0 * (ca * cb + sa * sb - d * (sb - sa));
  if (tmp < 0.0) return {};
  const double theta = std::atan2(ca - cb, d - sa + sb);
  return {mod2pi(alpha - theta), std::sqrt(tmp), mod2pi(-beta + theta)};
}

WordParams lsr(double d, double alpha, double beta) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double tmp = -2.0 + d * d + 2.0 * (ca * cb + sa * sb + d * (sa + sb));
  if (tmp < 0.0) return {};
  const double p = std::sqrt(tmp);
  const double theta = std::atan2(-ca - cb, d + sa + sb) - std::atan2(-2.0, p);
  return {mod2pi(-alpha + theta), p, mod2pi(-beta + theta)};
}

WordParams rsl(double d, double alpha, double beta) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double tmp = d * d - 2.0 + 2.0 * (ca * cb + sa * sb - d * (sa + sb));
  if (tmp < 0.0) return {};
  const double p = std::sqrt(tmp);
  const double theta = std::atan2(ca + cb, d - sa - sb) - std::atan2(2.0, p);
  return {mod2pi(alpha - theta), p, mod2pi(beta - theta)};
}

WordParams rlr(double d, double alpha, double beta) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double tmp = 0.125 * (6.0 - d * d + 2.0 * (ca * cb + sa * sb + d * (sa - sb)));
  if (std::fabs(tmp) > 1.0) return {};
  const double p = kTwoPi - std::acos(tmp);
  const double theta = std::atan2(ca - cb, d - sa + sb);
  const double t = mod2pi(alpha - theta + 0.5 * p);
  return {t, p, mod2pi(alpha - beta - t + p)};
}

WordParams lrl(double d, double alpha, double beta) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double tmp = 0.125 * (6.0 - d * d + 2.0 * (ca * cb + sa * sb - d * (sa - sb)));
  if (std::fabs(tmp) > 1.0) return {};
  const double p = kTwoPi - std::acos(tmp);
  const double theta = std::atan2(-ca + cb, d + sa - sb);
  const double t = mod2pi(-alpha + theta + 0.5 * p);
  return {t, p, mod2pi(beta - alpha - t + p)};
}

using WordFn = WordParams (*)(double, double, double);
constexpr std::array<WordFn, 6> kWordFns{lsl, rsr, lsr, rsl, rlr, lrl};

Configuration advance(const Configuration& c, SegmentKind kind, double len, double r) {
  Configuration n = c;
  switch (kind) {
    case SegmentKind::Straight:
      n.x += len * std::cos(c.theta);
      n.y += len * std::sin(c.theta);
      break;
    case SegmentKind::Left: {
      const double dphi = len / r;
      n.x += r * (std::sin(c.theta + dphi) - std::sin(c.theta));
      n.y += r * (-std::cos(c.theta + dphi) + std::cos(c.theta));
      n.theta = normalize_angle(c.theta + dphi);
      break;
    }
    case SegmentKind::Right: {
      const double dphi = len / r;
      n.x += r * (-std::sin(c.theta - dphi) + std::sin(c.theta));
      n.y += r * (std::cos(c.theta - dphi) - std::cos(c.theta));
      n.theta = normalize_angle(c.theta - dphi);
      break;
    }
  }
  return n;
}

}  // namespace

std::array<SegmentKind, 3> word_segments(DubinsWord word) {
  using K = SegmentKind;
  switch (word) {
    case DubinsWord::LSL: return {K::Left, K::Straight, K::Left};
    case DubinsWord::RSR: return {K::Right, K::Straight, K::Right};
    case DubinsWord::LSR: return {K::Left, K::Straight, K::Right};
    case DubinsWord::RSL: return {K::Right, K::Straight, K::Left};
    case DubinsWord::RLR: return {K::Right, K::Left, K::Right};
    case DubinsWord::LRL: return {K::Left, K::Right, K::Left};
  }
  return {K::Left, K::Straight, K::Left};
}

const char* word_name(DubinsWord word) {
  switch (word) {
    case DubinsWord::LSL: return "LSL";
    case DubinsWord::RSR: return "RSR";
    case DubinsWord::LSR: return "LSR";
    case DubinsWord::RSL: return "RSL";
    case DubinsWord::RLR: return "RLR";
    case DubinsWord::LRL: return "LRL";
  }
  return "?";
}

DubinsPath dubins_shortest(const Configuration& from, const Configuration& to, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("turning radius must be > 0");

  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  const double d = std::hypot(dx, dy) / r;
  const double phi = std::atan2(dy, dx);
  const double alpha = mod2pi(normalize_angle(from.theta) - phi);
  const double beta = mod2pi(normalize_angle(to.theta) - phi);

  DubinsPath best;
  best.start = from;
  best.end = to;
  best.radius = r;

  const double dtheta = std::fabs(mod2pi(alpha - beta + kPi) - kPi);
  if (d < 1e-9 && dtheta < 1e-9) {
    best.word = DubinsWord::LSL;
    best.seg_lengths = {0.0, d * r, 0.0};
    best.total_length = d * r;
    return best;
  }

  double best_len = kNoPath;
  for (int w = 0; w < 6; ++w) {
    const WordParams params = kWordFns[w](d, alpha, beta);
    const double len = params.length();
    if (len < best_len) {
      best_len = len;
      best.word = static_cast<DubinsWord>(w);
      best.seg_lengths = {params.t * r, params.p * r, params.q * r};
    }
  }
  best.total_length = best.seg_lengths[0] + best.seg_lengths[1] + best.seg_lengths[2];
  return best;
}

Configuration dubins_at(const DubinsPath& path, double arc_len) {
  const auto kinds = word_segments(path.word);
  Configuration c = path.start;
  c.theta = normalize_angle(c.theta);
  double remaining = std::max(0.0, std::min(arc_len, path.total_length));
  for (int i = 0; i < 3; ++i) {
    const double step = std::min(remaining, path.seg_lengths[i]);
    c = advance(c, kinds[i], step, path.radius);
    remaining -= step;
  }
  return c;
}

std::vector<Configuration> sample_path(const DubinsPath& path, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("sample step must be > 0");
  const int intervals = std::max(1, static_cast<int>(std::ceil(path.total_length / step - 1e-12)));
  std::vector<Configuration> samples;
  samples.reserve(intervals + 1);
  for (int i = 0; i <= intervals; ++i)
    samples.push_back(dubins_at(path, path.total_length * i / intervals));
  return samples;
}

}  // namespace dubcov
