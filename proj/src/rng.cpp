#include "exaro/rng.hpp"

#include <cmath>

namespace exaro {

double Rng::gauss()
{
	if (have_spare_) {
		have_spare_ = false;
		return spare_;
	}
	double u, v, s;
	do {
		u = 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
		v = 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0;
		s = u * u + v * v;
	} while (s >= 1.0 || s == 0.0);
	double m = std::sqrt(-2.0 * std::log(s) / s);
	spare_ = v * m;
	have_spare_ = true;
	return u * m;
}

} // namespace exaro
