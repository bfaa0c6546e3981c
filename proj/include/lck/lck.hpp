#pragma once

#include "lck/catalog.hpp"
#include "lck/complex.hpp"
#include "lck/constructions.hpp"
#include "lck/parse.hpp"
#include "lck/structures.hpp"
#include "lck/suites.hpp"
