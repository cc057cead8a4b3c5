#pragma once

#include "bier/complex.hpp"
#include "bier/bier_sphere.hpp"
#include "bier/fan.hpp"
#include "bier/geometry.hpp"
#include "bier/lp.hpp"
#include "bier/polytopality.hpp"
