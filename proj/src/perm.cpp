#include "genord/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace genord {

Permutation::Permutation(std::size_t degree) : img_(degree) {
  for (std::size_t i = 0; i < degree; ++i) img_[i] = static_cast<std::uint32_t>(i);
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint32_t v : images) {
    if (v >= images.size() || seen[v])
      throw std::invalid_argument("image list is not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::from_images_1based(const std::vector<long long>& images) {
  std::vector<std::uint32_t> img;
  img.reserve(images.size());
  for (long long v : images) {
    if (v < 1 || v > static_cast<long long>(images.size()))
      throw std::invalid_argument("1-based image out of range");
    img.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return from_images(std::move(img));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  std::vector<bool> used(degree, false);
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("expected '(' in cycle notation at position " +
                                  std::to_string(pos));
    ++pos;
    std::vector<std::uint32_t> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected point in cycle notation at position " +
                                    std::to_string(pos));
      long long v = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > static_cast<long long>(degree))
        throw std::invalid_argument("cycle point " + std::to_string(v) +
                                    " outside 1.." + std::to_string(degree));
      if (used[v - 1])
        throw std::invalid_argument("point " + std::to_string(v) + " repeated in cycles");
      used[v - 1] = true;
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      skip_ws();
      if (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cyc.size(); ++i)
      img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    skip_ws();
  }
  return from_images(std::move(img));
}

std::vector<long long> Permutation::images_1based() const {
  std::vector<long long> out;
  out.reserve(img_.size());
  for (std::uint32_t v : img_) out.push_back(static_cast<long long>(v) + 1);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

long long Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  long long result = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    os << '(' << (i + 1);
    seen[i] = true;
    std::size_t j = img_[i];
    while (j != i) {
      os << ',' << (j + 1);
      seen[j] = true;
      j = img_[j];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in composition");
  std::vector<std::uint32_t> img(p.degree());
  const auto& pi = p.images();
  const auto& qi = q.images();
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = qi[pi[i]];
  return Permutation::from_images(std::move(img));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g.inverse(), x), g);
}

Permutation commutator(const Permutation& x, const Permutation& y) {
  return compose(compose(compose(x.inverse(), y.inverse()), x), y);
}

Permutation perm_pow(const Permutation& p, long long e) {
  long long n = p.order();
  e %= n;
  if (e < 0) e += n;
  Permutation acc(p.degree());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return acc;
}

}  // namespace genord
