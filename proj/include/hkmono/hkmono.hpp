#ifndef HKMONO_HKMONO_HPP
#define HKMONO_HKMONO_HPP

#include "hkmono/rational.hpp"
#include "hkmono/matrix.hpp"
#include "hkmono/powers.hpp"
#include "hkmono/quad_space.hpp"
#include "hkmono/nilpotent.hpp"
#include "hkmono/weights.hpp"
#include "hkmono/clifford.hpp"
#include "hkmono/reduction.hpp"
#include "hkmono/llv.hpp"
#include "hkmono/predict.hpp"

#endif
