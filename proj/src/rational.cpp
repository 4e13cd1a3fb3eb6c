#include "exaro/rational.hpp"

#include <stdexcept>

namespace exaro {

Rat parse_rat(const std::string& s)
{
	size_t start = 0, end = s.size();
	while (start < end && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
	while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
	std::string body = s.substr(start, end - start);
	if (body.empty()) throw std::invalid_argument("empty rational literal");
	for (size_t i = 0; i < body.size(); ++i) {
		char c = body[i];
		bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
		          ((c == '-' || c == '+') && (i == 0 || body[i - 1] == '/'));
		if (!ok) throw std::invalid_argument("malformed rational literal: " + s);
	}
	try {
		Rat r(body);
		r.canonicalize();
		return r;
	} catch (const std::invalid_argument&) {
		throw std::invalid_argument("malformed rational literal: " + s);
	}
}

std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace exaro
