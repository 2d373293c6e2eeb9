#include <qwhit/qseries.hpp>

#include <sstream>

namespace qwhit {

std::string QSeries::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Rat& c = c_[k];
    if (c == 0) continue;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool unit = (a == 1);
    if (k == 0) {
      os << a.get_str();
    } else {
      if (!unit) os << a.get_str() << "*";
      os << "q";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qwhit
