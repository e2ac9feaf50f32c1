#pragma once

#include "qinv/canonical.hpp"
#include "qinv/common.hpp"
#include "qinv/decompose.hpp"
#include "qinv/fixtures.hpp"
#include "qinv/matrix.hpp"
#include "qinv/membership.hpp"
#include "qinv/modular.hpp"
#include "qinv/polynomial.hpp"
#include "qinv/quiver.hpp"
#include "qinv/rational.hpp"
#include "qinv/representation.hpp"
#include "qinv/thin.hpp"
#include "qinv/transforms.hpp"
#include "qinv/unipoly.hpp"
