#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Dense>

namespace mrflow {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MRFLOW_DEFINE_ERROR(Name)                            \
  struct Name : Error {                                      \
    explicit Name(const std::string& msg = #Name) : Error(msg) {} \
  }

MRFLOW_DEFINE_ERROR(DegeneratePoint);
MRFLOW_DEFINE_ERROR(SingularStructure);
MRFLOW_DEFINE_ERROR(SingularParallax);
MRFLOW_DEFINE_ERROR(EpipoleCoincident);
MRFLOW_DEFINE_ERROR(DegenerateScale);
MRFLOW_DEFINE_ERROR(InsufficientCorrespondences);
MRFLOW_DEFINE_ERROR(NoConsensus);
MRFLOW_DEFINE_ERROR(ParallaxTooSmall);
MRFLOW_DEFINE_ERROR(IllConditioned);
MRFLOW_DEFINE_ERROR(NoOverlap);
MRFLOW_DEFINE_ERROR(DegenerateStructure);
MRFLOW_DEFINE_ERROR(DimensionMismatch);
MRFLOW_DEFINE_ERROR(ParseError);
MRFLOW_DEFINE_ERROR(BadMagic);
MRFLOW_DEFINE_ERROR(TruncatedFile);
MRFLOW_DEFINE_ERROR(NonFinite);
MRFLOW_DEFINE_ERROR(UnsupportedMaxval);
MRFLOW_DEFINE_ERROR(EmptyValidSet);
MRFLOW_DEFINE_ERROR(InvalidSpec);
MRFLOW_DEFINE_ERROR(TooLarge);

#undef MRFLOW_DEFINE_ERROR

// ---------------------------------------------------------------------------
// Point
// ---------------------------------------------------------------------------

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double px, double py) : x(px), y(py) {}
  explicit Point2(const Vec2& v) : x(v.x()), y(v.y()) {}

  Vec2 vec() const { return {x, y}; }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Point2 operator+(const Point2& a, const Vec2& d) { return {a.x + d.x(), a.y + d.y()}; }
inline Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }

// ---------------------------------------------------------------------------
// Homography
// ---------------------------------------------------------------------------

/// 3x3 projective transform, stored with unit Frobenius norm and the sign
/// fixed so that m(2,2) >= 0 (first nonzero entry in row-major order
/// positive when m(2,2) == 0).
class Homography {
 public:
  Homography() : m_(Mat3::Identity() / std::sqrt(3.0)) {}

  static Homography from_matrix(const Mat3& m) {
    double n = m.norm();
    if (!(n > 0.0) || !m.allFinite()) throw Error("Homography: invalid matrix");
    Mat3 s = m / n;
    double sign = 0.0;
    if (s(2, 2) != 0.0) {
      sign = s(2, 2) > 0.0 ? 1.0 : -1.0;
    } else {
      for (int r = 0; r < 3 && sign == 0.0; ++r)
        for (int c = 0; c < 3 && sign == 0.0; ++c)
          if (s(r, c) != 0.0) sign = s(r, c) > 0.0 ? 1.0 : -1.0;
    }
    Homography h;
    h.m_ = s * sign;
    return h;
  }

  static Homography identity() { return Homography(); }

  static Homography translation(double tx, double ty) {
    Mat3 m = Mat3::Identity();
    m(0, 2) = tx;
    m(1, 2) = ty;
    return from_matrix(m);
  }

  const Mat3& matrix() const { return m_; }

  Homography inverse() const {
    Mat3 inv = m_.inverse();
    if (!inv.allFinite()) throw Error("Homography: singular");
    return from_matrix(inv);
  }

 private:
  Mat3 m_;
};

// ---------------------------------------------------------------------------
// Plane+Parallax per-direction parameters {H, b, e}
// ---------------------------------------------------------------------------

struct PppParams {
  Homography H;      // maps the neighboring frame onto the reference frame
  double b = 1.0;    // camera-motion scalar T_z / d(C2)
  Point2 e;          // epipole / focus of expansion in the reference frame

  bool valid() const {
    return std::isfinite(b) && b != 0.0 && e.finite();
  }
};

// ---------------------------------------------------------------------------
// Dense per-pixel containers
// ---------------------------------------------------------------------------

class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(int w, int h, double fill = 0.0) : w_(w), h_(h), v_(size_t(w) * h, fill) {
    if (w <= 0 || h <= 0) throw Error("ScalarField: bad dimensions");
  }

  int width() const { return w_; }
  int height() const { return h_; }
  size_t size() const { return v_.size(); }

  double& at(int x, int y) { return v_[size_t(y) * w_ + x]; }
  double at(int x, int y) const { return v_[size_t(y) * w_ + x]; }
  double& operator[](size_t i) { return v_[i]; }
  double operator[](size_t i) const { return v_[i]; }

  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

  bool same_size(const ScalarField& o) const { return w_ == o.w_ && h_ == o.h_; }

 private:
  int w_ = 0, h_ = 0;
  std::vector<double> v_;
};

class FlowField {
 public:
  FlowField() = default;
  FlowField(int w, int h) : w_(w), h_(h), v_(size_t(w) * h * 2, 0.0) {
    if (w <= 0 || h <= 0) throw Error("FlowField: bad dimensions");
  }

  int width() const { return w_; }
  int height() const { return h_; }

  double& u(int x, int y) { return v_[(size_t(y) * w_ + x) * 2]; }
  double u(int x, int y) const { return v_[(size_t(y) * w_ + x) * 2]; }
  double& v(int x, int y) { return v_[(size_t(y) * w_ + x) * 2 + 1]; }
  double v(int x, int y) const { return v_[(size_t(y) * w_ + x) * 2 + 1]; }

  Vec2 at(int x, int y) const { return {u(x, y), v(x, y)}; }
  void set(int x, int y, const Vec2& d) {
    u(x, y) = d.x();
    v(x, y) = d.y();
  }

  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

  bool same_size(const FlowField& o) const { return w_ == o.w_ && h_ == o.h_; }

 private:
  int w_ = 0, h_ = 0;
  std::vector<double> v_;
};

class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int w, int h, uint8_t fill = 0) : w_(w), h_(h), v_(size_t(w) * h, fill ? 1 : 0) {
    if (w <= 0 || h <= 0) throw Error("BinaryMask: bad dimensions");
  }

  int width() const { return w_; }
  int height() const { return h_; }
  size_t size() const { return v_.size(); }

  uint8_t& at(int x, int y) { return v_[size_t(y) * w_ + x]; }
  uint8_t at(int x, int y) const { return v_[size_t(y) * w_ + x]; }
  uint8_t& operator[](size_t i) { return v_[i]; }
  uint8_t operator[](size_t i) const { return v_[i]; }

  size_t count() const {
    size_t n = 0;
    for (uint8_t b : v_) n += b;
    return n;
  }

  const std::vector<uint8_t>& data() const { return v_; }
  std::vector<uint8_t>& data() { return v_; }

  bool same_size(const BinaryMask& o) const { return w_ == o.w_ && h_ == o.h_; }

 private:
  int w_ = 0, h_ = 0;
  std::vector<uint8_t> v_;
};

/// Interleaved multi-channel image; raw intensities live in [0,1],
/// derived gradient channels are unbounded.
class Image {
 public:
  Image() = default;
  Image(int w, int h, int channels, double fill = 0.0)
      : w_(w), h_(h), c_(channels), v_(size_t(w) * h * channels, fill) {
    if (w <= 0 || h <= 0 || channels <= 0) throw Error("Image: bad dimensions");
  }

  int width() const { return w_; }
  int height() const { return h_; }
  int channels() const { return c_; }

  double& at(int x, int y, int ch = 0) { return v_[(size_t(y) * w_ + x) * c_ + ch]; }
  double at(int x, int y, int ch = 0) const { return v_[(size_t(y) * w_ + x) * c_ + ch]; }

  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

  bool same_size(const Image& o) const { return w_ == o.w_ && h_ == o.h_; }

 private:
  int w_ = 0, h_ = 0, c_ = 0;
  std::vector<double> v_;
};

struct RobustScale {
  double sigma = 1.0;

  RobustScale() = default;
  explicit RobustScale(double s) : sigma(s) {
    if (!(s > 0.0)) throw Error("RobustScale: sigma must be positive");
  }
};

}  // namespace mrflow
