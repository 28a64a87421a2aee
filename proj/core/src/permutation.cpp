#include "permdesign/permutation.hpp"

#include "permdesign/errors.hpp"

#include <cctype>
#include <utility>

namespace permdesign {

Permutation Permutation::identity(int n) {
  if (n < 1)
    throw error("permutation degree must be at least 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    images[static_cast<std::size_t>(x - 1)] = x;
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1)
    throw error("permutation degree must be at least 1");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int value : images_) {
    if (value < 1 || value > n)
      throw error("image " + std::to_string(value) + " out of range [1.." +
                  std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(value - 1)])
      throw error("duplicate image " + std::to_string(value));
    seen[static_cast<std::size_t>(value - 1)] = true;
  }
}

int Permutation::operator()(int x) const {
  if (x < 1 || x > degree())
    throw error("point " + std::to_string(x) + " out of range");
  return images_[static_cast<std::size_t>(x - 1)];
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw error("degree mismatch in composition");
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = images_[static_cast<std::size_t>(rhs.images_[i] - 1)];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    images[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

int Permutation::fixed_points() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == static_cast<int>(i) + 1)
      ++count;
  return count;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  return sigma.compose(tau);
}

Permutation inverse(const Permutation& sigma) { return sigma.inverse(); }

int fixed_points(const Permutation& sigma) { return sigma.fixed_points(); }

int distance(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw error("degree mismatch in distance");
  // Agreement count equals fixed_points(sigma * tau^-1).
  int agreements = 0;
  const auto& a = sigma.images();
  const auto& b = tau.images();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == b[i])
      ++agreements;
  return sigma.degree() - agreements;
}

Permutation parse_one_line(std::string_view text, int n) {
  if (n < 1)
    throw error("permutation degree must be at least 1");
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      if (!current.empty())
        tokens.push_back(std::exchange(current, {}));
    } else {
      current += ch;
    }
  }
  if (!current.empty())
    tokens.push_back(std::move(current));

  // A single run of digits stands for one entry per digit when n <= 9.
  if (tokens.size() == 1 && n <= 9 && static_cast<int>(tokens[0].size()) == n &&
      n > 1) {
    std::vector<std::string> digits;
    for (char ch : tokens[0]) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw error("malformed entry '" + tokens[0] + "'");
      digits.emplace_back(1, ch);
    }
    tokens = std::move(digits);
  }

  if (static_cast<int>(tokens.size()) != n)
    throw error("expected " + std::to_string(n) + " entries, got " +
                std::to_string(tokens.size()));

  std::vector<int> images;
  images.reserve(tokens.size());
  for (const auto& token : tokens) {
    for (char ch : token)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw error("malformed entry '" + token + "'");
    if (token.size() > 9)
      throw error("malformed entry '" + token + "'");
    images.push_back(std::stoi(token));
  }
  return Permutation(std::move(images));
}

std::string format_one_line(const Permutation& sigma) {
  std::string out;
  for (int value : sigma.images()) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(value);
  }
  return out;
}

std::size_t hash_value(const Permutation& sigma) {
  // FNV-1a over the image sequence
  std::size_t h = 1469598103934665603ull;
  for (int value : sigma.images()) {
    h ^= static_cast<std::size_t>(value);
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace permdesign
