#pragma once

#include "toricq/integer.hpp"
#include "toricq/matrix.hpp"
#include "toricq/normal_form.hpp"
#include "toricq/sublattice.hpp"
#include "toricq/torus.hpp"
#include "toricq/cone.hpp"
#include "toricq/hilbert.hpp"
#include "toricq/fan.hpp"
#include "toricq/point.hpp"
#include "toricq/morphism.hpp"
#include "toricq/separation.hpp"
#include "toricq/example.hpp"
