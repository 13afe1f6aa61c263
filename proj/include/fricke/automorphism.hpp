#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fricke/error.hpp"
#include "fricke/word.hpp"

namespace fricke {

namespace detail {

/// Substitute images into w and freely reduce on the fly.
inline Word apply_images(const std::vector<Word>& images, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter g : w.letters()) {
    const Word& im = images[static_cast<std::size_t>(letter_index(g) - 1)];
    if (g > 0) {
      for (Letter h : im.letters()) push_cancel(out, h);
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) {
        push_cancel(out, -*it);
      }
    }
  }
  return Word(std::move(out), Form::reduced);
}

}  // namespace detail

/// An automorphism of a free group of the given rank, supplied as
/// generator images together with the images under the inverse map.
/// Construction validates that the two substitution tables compose to
/// the identity in both orders, so every value of this type is a
/// genuine automorphism.
class Automorphism {
 public:
  Automorphism(int rank, std::vector<Word> images,
               std::vector<Word> inverse_images)
      : rank_(rank),
        images_(std::move(images)),
        inverse_images_(std::move(inverse_images)) {
    if (rank_ < 2) throw validation_error("automorphism rank must be >= 2");
    if (images_.size() != static_cast<std::size_t>(rank_) ||
        inverse_images_.size() != static_cast<std::size_t>(rank_)) {
      throw validation_error("need exactly one image per generator");
    }
    for (int i = 0; i < rank_; ++i) {
      if (images_[i].max_index() > rank_ || inverse_images_[i].max_index() > rank_) {
        throw validation_error("image uses a generator beyond the rank");
      }
      images_[i] = reduce(images_[i]);
      inverse_images_[i] = reduce(inverse_images_[i]);
    }
    for (int i = 0; i < rank_; ++i) {
      Word gen(std::vector<Letter>{static_cast<Letter>(i + 1)}, Form::reduced);
      if (detail::apply_images(images_, inverse_images_[i]) != gen ||
          detail::apply_images(inverse_images_, images_[i]) != gen) {
        throw validation_error(
            "images and inverse_images do not compose to the identity at x" +
            std::to_string(i + 1));
      }
    }
  }

  static Automorphism identity(int rank) {
    std::vector<Word> gens;
    for (int i = 1; i <= rank; ++i) {
      gens.emplace_back(std::vector<Letter>{static_cast<Letter>(i)},
                        Form::cyclically_reduced);
    }
    return Automorphism(rank, gens, gens);
  }

  int rank() const { return rank_; }

  /// Image of generator x_i (1-based).
  const Word& image(int i) const {
    return images_[static_cast<std::size_t>(i - 1)];
  }
  const Word& inverse_image(int i) const {
    return inverse_images_[static_cast<std::size_t>(i - 1)];
  }
  const std::vector<Word>& images() const { return images_; }
  const std::vector<Word>& inverse_images() const { return inverse_images_; }

  Automorphism inverse() const {
    return Automorphism(rank_, inverse_images_, images_);
  }

 private:
  int rank_;
  std::vector<Word> images_;
  std::vector<Word> inverse_images_;
};

/// Freely reduced image of w under f.
inline Word apply(const Automorphism& f, const Word& w) {
  if (w.max_index() > f.rank()) {
    throw validation_error("word uses a generator beyond the automorphism rank");
  }
  return detail::apply_images(f.images(), w);
}

/// Composition f after g: (f.g)(w) = f(g(w)).
inline Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.rank() != g.rank()) throw validation_error("rank mismatch in compose");
  std::vector<Word> images, inverse_images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  inverse_images.reserve(static_cast<std::size_t>(f.rank()));
  for (int i = 1; i <= f.rank(); ++i) {
    images.push_back(apply(f, g.image(i)));
    inverse_images.push_back(apply(g.inverse(), f.inverse_image(i)));
  }
  return Automorphism(f.rank(), std::move(images), std::move(inverse_images));
}

/// The orbit prefix (w, f(w), ..., f^m(w)), each entry freely reduced,
/// where m = n unless some later image's reduced length would exceed
/// length_budget; stopping early is not an error. Images are computed
/// by substituting into the previous iterate, never by composing f
/// with itself.
inline std::vector<Word> iterate_image(const Automorphism& f, const Word& w,
                                       int n, std::size_t length_budget) {
  std::vector<Word> orbit;
  orbit.push_back(reduce(w));
  for (int k = 0; k < n; ++k) {
    Word next = apply(f, orbit.back());
    if (next.size() > length_budget) break;
    orbit.push_back(std::move(next));
  }
  return orbit;
}

/// The inner automorphism w -> u w u^{-1}.
inline Automorphism inner_automorphism(int rank, const Word& u) {
  Word ui = inverse(u);
  std::vector<Word> images, inverse_images;
  for (int i = 1; i <= rank; ++i) {
    Word gen(std::vector<Letter>{static_cast<Letter>(i)}, Form::reduced);
    images.push_back(concat(concat(u, gen), ui));
    inverse_images.push_back(concat(concat(ui, gen), u));
  }
  return Automorphism(rank, std::move(images), std::move(inverse_images));
}

}  // namespace fricke
