#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "conics.hpp"

namespace ek::svg {

struct Style {
  std::string stroke = "black";
  double width = 1.5;
  std::string dash;  // SVG dash array, empty for solid
};

// Drawing in the affine chart (x1/x0, x2/x0). An elliptic isometry is applied
// first so that a chosen point sits at the chart center.
class Figure {
 public:
  explicit Figure(double half_width = 2.5, int pixels = 640) : w_(half_width), px_(pixels) {}

  // Rotation taking the unit vector c to (1,0,0).
  void center_on(const Vec3<double>& c) {
    Vec3<double> g = unit(c);
    if (g[0] < 0) g = -g;
    Vec3<double> e{1, 0, 0};
    Vec3<double> k = cross(g, e);
    double s = norm(k), co = dot(g, e);
    rot_ = identity3<double>();
    if (s < 1e-15) return;
    k = k / s;
    // Rodrigues: R = I + sin K + (1 - cos) K^2
    Mat3<double> K{{{0, -k[2], k[1]}, {k[2], 0, -k[0]}, {-k[1], k[0], 0}}};
    Mat3<double> K2 = K * K;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) rot_[i][j] += s * K[i][j] + (1 - co) * K2[i][j];
  }

  void substitute_circle() {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\" "
                  "stroke-dasharray=\"2,4\"/>\n",
                  sx(0), sy(0), scale());
    body_ += buf;
  }

  void point(const Vec3<double>& ambient, const std::string& label, const std::string& color = "black") {
    Vec3<double> x = rot_ * ambient;
    if (std::abs(x[0]) < 1e-9 * norm(x)) {
      warnings.push_back("ElementOffChart: " + label + " lies on the chart's line at infinity");
      return;
    }
    double X = x[1] / x[0], Y = x[2] / x[0];
    if (std::abs(X) > w_ || std::abs(Y) > w_) {
      warnings.push_back("ElementOffChart: " + label + " lies outside the drawing window");
      return;
    }
    char buf[512];
    std::snprintf(buf, sizeof buf, "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"3.5\" fill=\"%s\"/>\n", sx(X), sy(Y),
                  color.c_str());
    body_ += buf;
    std::snprintf(buf, sizeof buf, "  <text x=\"%.3f\" y=\"%.3f\" font-size=\"13\" font-family=\"sans-serif\">%s</text>\n",
                  sx(X) + 5, sy(Y) - 5, escape(label).c_str());
    body_ += buf;
  }

  // Line l0 x0 + l1 x1 + l2 x2 = 0 clipped to the window.
  void line(const Vec3<double>& ambient_line, const std::string& label, const Style& st = {}) {
    // points map by x -> R x, so lines map by l -> R l (R orthogonal)
    Vec3<double> l = rot_ * ambient_line;
    std::vector<std::pair<double, double>> hits;
    auto add = [&](double X, double Y) {
      if (std::abs(X) <= w_ * (1 + 1e-12) && std::abs(Y) <= w_ * (1 + 1e-12)) hits.emplace_back(X, Y);
    };
    if (std::abs(l[2]) > 1e-15)
      for (double X : {-w_, w_}) add(X, -(l[0] + l[1] * X) / l[2]);
    if (std::abs(l[1]) > 1e-15)
      for (double Y : {-w_, w_}) add(-(l[0] + l[2] * Y) / l[1], Y);
    if (hits.size() < 2) {
      warnings.push_back("ElementOffChart: " + label + " misses the drawing window");
      return;
    }
    // the two hits farthest apart
    std::size_t bi = 0, bj = 1;
    double best = -1;
    for (std::size_t i = 0; i < hits.size(); ++i)
      for (std::size_t j = i + 1; j < hits.size(); ++j) {
        double d = std::hypot(hits[i].first - hits[j].first, hits[i].second - hits[j].second);
        if (d > best) best = d, bi = i, bj = j;
      }
    char buf[512];
    std::snprintf(buf, sizeof buf, "  <line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"%s><title>%s</title></line>\n",
                  sx(hits[bi].first), sy(hits[bi].second), sx(hits[bj].first), sy(hits[bj].second),
                  stroke(st).c_str(), escape(label).c_str());
    body_ += buf;
  }

  // Conic x^T Q x = 0 in ambient coordinates, traced along its projective
  // parametrization and cut where it leaves the chart.
  void conic(const Mat3<double>& ambient_q, const std::string& label, const Style& st = {}, int samples = 720) {
    Mat3<double> q = rot_ * ambient_q * transpose(rot_);
    std::vector<Vec3<double>> pts;
    try {
      pts = sample_conic(Conic<double>{q}, samples);
    } catch (const Error&) {
      warnings.push_back("ElementOffChart: " + label + " has no real points");
      return;
    }
    if (!pts.empty()) pts.push_back(pts.front());
    std::string path;
    bool pen = false;
    int drawn = 0;
    for (auto& x : pts) {
      bool ok = std::abs(x[0]) > 1e-9;
      double X = ok ? x[1] / x[0] : 0, Y = ok ? x[2] / x[0] : 0;
      ok = ok && std::abs(X) <= 4 * w_ && std::abs(Y) <= 4 * w_;
      if (!ok) {
        pen = false;
        continue;
      }
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s%.3f %.3f ", pen ? "L" : "M", sx(X), sy(Y));
      path += buf;
      pen = true;
      ++drawn;
    }
    if (drawn < 2) {
      warnings.push_back("ElementOffChart: " + label + " lies outside the drawing window");
      return;
    }
    body_ += "  <path d=\"" + path + "\"" + stroke(st) + "><title>" + escape(label) + "</title></path>\n";
  }

  std::string str() const {
    char head[512];
    std::snprintf(head, sizeof head,
                  "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%d\" height=\"%d\" "
                  "viewBox=\"0 0 %d %d\">\n"
                  "  <defs><clipPath id=\"win\"><rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\"/></clipPath></defs>\n"
                  "  <rect x=\"0\" y=\"0\" width=\"%d\" height=\"%d\" fill=\"white\"/>\n"
                  "  <g clip-path=\"url(#win)\">\n",
                  px_, px_, px_, px_, px_, px_, px_, px_);
    return std::string(head) + body_ + "  </g>\n</svg>\n";
  }

  std::vector<std::string> warnings;

 private:
  double w_;
  int px_;
  Mat3<double> rot_ = identity3<double>();
  std::string body_;

  double scale() const { return px_ / (2 * w_); }
  double sx(double X) const { return (X + w_) * scale(); }
  double sy(double Y) const { return (w_ - Y) * scale(); }

  static std::string stroke(const Style& st) {
    char buf[160];
    std::snprintf(buf, sizeof buf, " fill=\"none\" stroke=\"%s\" stroke-width=\"%.2f\"", st.stroke.c_str(), st.width);
    std::string s = buf;
    if (!st.dash.empty()) s += " stroke-dasharray=\"" + st.dash + "\"";
    return s;
  }

  static std::string escape(const std::string& t) {
    std::string o;
    for (char ch : t) {
      switch (ch) {
        case '<': o += "&lt;"; break;
        case '>': o += "&gt;"; break;
        case '&': o += "&amp;"; break;
        case '"': o += "&quot;"; break;
        default: o += ch;
      }
    }
    return o;
  }
};

// Ambient matrix of a barycentric conic: x = V^-T X, so Q = V^-1 M V^-T with V
// the matrix whose rows are the vertex representatives.
template <class T>
inline Mat3<double> ambient_conic(const Frame<T>& f, const Conic<T>& c) {
  Mat3<T> v = f.vertex_matrix();
  Mat3<T> vi = (T(1) / det(v)) * adjugate(v);
  Mat3<T> q = vi * c.m * transpose(vi);
  Mat3<double> out;
  T n = frob(q);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = double(q[i][j] / n);
  return out;
}

template <class T>
inline Vec3<double> to_double(const Vec3<T>& v) {
  return {double(v[0]), double(v[1]), double(v[2])};
}

}  // namespace ek::svg
