#ifndef BRANCHLIFT_BRANCHLIFT_HPP
#define BRANCHLIFT_BRANCHLIFT_HPP

#include <branchlift/error.hpp>
#include <branchlift/algebra.hpp>
#include <branchlift/chardata.hpp>
#include <branchlift/semigroup.hpp>
#include <branchlift/parametrize.hpp>
#include <branchlift/polygon.hpp>
#include <branchlift/weierstrass.hpp>
#include <branchlift/oracle.hpp>
#include <branchlift/implicitize.hpp>
#include <branchlift/curve_file.hpp>

#endif // BRANCHLIFT_BRANCHLIFT_HPP
