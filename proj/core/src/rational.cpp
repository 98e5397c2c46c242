#include "gwdt/rational.hpp"

namespace gwdt {

namespace {

std::string imag_part(const Rat& im)
{
    if (im.is_one()) return "i";
    if ((-im).is_one()) return "-i";
    return im.str() + "i";
}

}  // namespace

std::string GaussRat::str() const
{
    if (is_zero()) return "0";
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return imag_part(im_);
    std::string s = re_.str();
    if (im_.sign() > 0) s += "+";
    return s + imag_part(im_);
}

}  // namespace gwdt
