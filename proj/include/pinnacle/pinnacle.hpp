#pragma once

#include "pinnacle/characterize.hpp"
#include "pinnacle/construct.hpp"
#include "pinnacle/counting.hpp"
#include "pinnacle/families.hpp"
#include "pinnacle/graph.hpp"
#include "pinnacle/io.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/poset.hpp"
#include "pinnacle/reduction.hpp"
#include "pinnacle/transform.hpp"
