#pragma once

#include <gmpxx.h>

#include <string>

namespace grassblow {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string num_str(const Rat& q) { return q.get_num().get_str(); }
inline std::string den_str(const Rat& q) { return q.get_den().get_str(); }

inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return num_str(q);
    return num_str(q) + "/" + den_str(q);
}

}  // namespace grassblow
