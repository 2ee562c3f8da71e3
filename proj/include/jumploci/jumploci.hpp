#pragma once

#include "jumploci/aomoto.hpp"
#include "jumploci/arrangement.hpp"
#include "jumploci/elliptic.hpp"
#include "jumploci/error.hpp"
#include "jumploci/exterior.hpp"
#include "jumploci/fixtures.hpp"
#include "jumploci/foxcalc.hpp"
#include "jumploci/io.hpp"
#include "jumploci/master.hpp"
#include "jumploci/matrix.hpp"
#include "jumploci/polynomial.hpp"
#include "jumploci/scalars.hpp"
#include "jumploci/torus.hpp"
#include "jumploci/verification.hpp"
