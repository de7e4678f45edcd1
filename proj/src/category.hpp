#pragma once

#include <string>
#include <vector>

#include "error.hpp"
#include "finset.hpp"
#include "fq.hpp"
#include "matrix.hpp"

namespace catlim {

struct VecObj {
  Fq field;
  int dim = 0;
  bool operator==(const VecObj&) const = default;
};

// Category traits shared by the diagram, limit, and codensity machinery.
// Morphism enumeration is lexicographic so every construction is
// reproducible.
struct SetCat {
  using Obj = SetObj;
  using Mor = SetMap;

  static Obj dom(const Mor& m) { return SetObj{m.dom}; }
  static Obj cod(const Mor& m) { return SetObj{m.cod}; }
  static Mor id(const Obj& o) { return set_identity(o.size); }
  static Mor compose(const Mor& g, const Mor& f) { return set_compose(g, f); }
  static bool eq(const Mor& a, const Mor& b) { return a == b; }
  static bool is_iso(const Mor& m) { return set_is_bijective(m); }

  static std::vector<Mor> hom(const Obj& a, const Obj& b) {
    std::vector<Mor> out;
    if (a.size == 0) {
      out.push_back(Mor{0, b.size, {}});
      return out;
    }
    if (b.size == 0) return out;
    std::vector<int> t(static_cast<std::size_t>(a.size), 0);
    while (true) {
      out.push_back(Mor{a.size, b.size, t});
      int i = a.size - 1;
      while (i >= 0 && t[static_cast<std::size_t>(i)] == b.size - 1) {
        t[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++t[static_cast<std::size_t>(i)];
    }
    return out;
  }

  static std::string mor_key(const Mor& m) {
    std::string k = std::to_string(m.dom) + ">" + std::to_string(m.cod) + ":";
    for (int v : m.table) k += std::to_string(v) + ",";
    return k;
  }

  static std::string obj_desc(const Obj& o) { return "size " + std::to_string(o.size); }
};

struct VecCat {
  using Obj = VecObj;
  using Mor = Mat;  // cod.dim x dom.dim matrix; the field rides along

  static Obj dom(const Mor& m) { return VecObj{m.field(), m.cols()}; }
  static Obj cod(const Mor& m) { return VecObj{m.field(), m.rows()}; }
  static Mor id(const Obj& o) { return Mat::identity(o.field, o.dim); }
  static Mor compose(const Mor& g, const Mor& f) { return mul(g, f); }
  static bool eq(const Mor& a, const Mor& b) { return a == b; }
  static bool is_iso(const Mor& m) { return is_invertible(m); }

  static std::vector<Mor> hom(const Obj& a, const Obj& b) {
    require(a.field == b.field, Errc::type_mismatch, "hom across different fields");
    std::vector<Mor> out;
    int cells = b.dim * a.dim;
    long total = 1;
    for (int i = 0; i < cells; ++i) {
      total *= a.field.q;
      require(total <= 1'000'000, Errc::budget_exceeded, "hom-set enumeration too large");
    }
    for (long idx = 0; idx < total; ++idx) {
      Mat m(a.field, b.dim, a.dim);
      long rest = idx;
      // Most significant digit first, so enumeration is lexicographic in the
      // row-major entry list.
      for (int c = cells - 1; c >= 0; --c) {
        m(c / a.dim, c % a.dim) = static_cast<std::uint8_t>(rest % a.field.q);
        rest /= a.field.q;
      }
      out.push_back(std::move(m));
    }
    return out;
  }

  static std::string mor_key(const Mor& m) {
    std::string k = std::to_string(m.cols()) + ">" + std::to_string(m.rows()) + ":";
    for (std::uint8_t v : m.flat()) k += std::to_string(static_cast<int>(v)) + ",";
    return k;
  }

  static std::string obj_desc(const Obj& o) { return "dim " + std::to_string(o.dim); }
};

}  // namespace catlim
