#pragma once

#include "eves/errors.hpp"
#include "eves/rational.hpp"
#include "eves/numtheory.hpp"
#include "eves/matrix.hpp"
#include "eves/wps.hpp"
#include "eves/configuration.hpp"
#include "eves/invariant.hpp"
#include "eves/reconstruct.hpp"
#include "eves/oracle.hpp"
#include "eves/io.hpp"
