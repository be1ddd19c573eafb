#pragma once

// Everything except the JSON and command layers.
#include "ginv/big_rational.hpp"
#include "ginv/blocks.hpp"
#include "ginv/checks.hpp"
#include "ginv/decompositions.hpp"
#include "ginv/errors.hpp"
#include "ginv/gaussian_rational.hpp"
#include "ginv/generators.hpp"
#include "ginv/inverses.hpp"
#include "ginv/linalg.hpp"
#include "ginv/m_weak_group.hpp"
#include "ginv/matrix.hpp"
#include "ginv/suite.hpp"
#include "ginv/version.hpp"
