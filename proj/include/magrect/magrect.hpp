#pragma once

#include <magrect/construct.hpp>
#include <magrect/designs.hpp>
#include <magrect/dihedral.hpp>
#include <magrect/feasibility.hpp>
#include <magrect/json_io.hpp>
#include <magrect/search.hpp>
#include <magrect/verify.hpp>
