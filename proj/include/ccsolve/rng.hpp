#pragma once

#include <cstdint>
#include <string_view>

namespace ccsolve::nd {

// Splittable counter-based random stream. Draws are a pure function of
// (key, counter), so a stream can be handed to a worker and replayed
// exactly. Child streams are derived by mixing a label into the key;
// generation, training and sampling each own an independent named stream.
class RngStream {
  public:
    RngStream() : RngStream(0) {}
    explicit RngStream(std::uint64_t seed);

    RngStream split(std::string_view label) const;
    RngStream split(std::uint64_t index) const;

    std::uint64_t next_u64();
    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);   // [lo, hi)
    int uniform_int(int lo, int hi);        // inclusive on both ends
    double gaussian();                      // standard normal, Box-Muller

    std::uint64_t key() const { return key_; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ccsolve::nd
