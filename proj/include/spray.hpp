#pragma once

#include "spray/algebra.hpp"
#include "spray/applications.hpp"
#include "spray/calculus.hpp"
#include "spray/constructors.hpp"
#include "spray/errors.hpp"
#include "spray/multi_index.hpp"
#include "spray/spray.hpp"
#include "spray/textio.hpp"
#include "spray/views.hpp"
