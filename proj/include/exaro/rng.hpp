#pragma once

#include "exaro/rational.hpp"

#include <cstdint>

namespace exaro {

/// splitmix64; deterministic across platforms, unlike std::mt19937 distributions.
class Rng {
  public:
	explicit Rng(uint64_t seed) : state_(seed) {}

	uint64_t next()
	{
		uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
		return z ^ (z >> 31);
	}

	/// Uniform integer in [lo, hi], inclusive.
	long range(long lo, long hi)
	{
		return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
	}

	bool chance(int num, int den) { return range(0, den - 1) < num; }

	/// Small integer coefficient in [-mag, mag].
	Rat coeff(int mag = 3) { return rat(range(-mag, mag)); }

	/// Nonzero small integer coefficient.
	Rat coeff_nonzero(int mag = 3)
	{
		long v = range(1, mag);
		return rat(chance(1, 2) ? v : -v);
	}

	/// Small rational with denominator in {1,2,3}.
	Rat small_rat(int mag = 2) { return rat(range(-mag, mag), range(1, 3)); }

	/// Gaussian via Box-Muller, for float-only trials.
	double gauss();

  private:
	uint64_t state_;
	bool have_spare_ = false;
	double spare_ = 0.0;
};

} // namespace exaro
