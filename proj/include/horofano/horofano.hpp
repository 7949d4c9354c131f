#pragma once

#include "horofano/error.hpp"
#include "horofano/exactal.hpp"
#include "horofano/rootsys.hpp"
#include "horofano/polytope.hpp"
#include "horofano/horo.hpp"
#include "horofano/curves.hpp"
#include "horofano/theorem.hpp"
#include "horofano/instance.hpp"
#include "horofano/report.hpp"
#include "horofano/enumerate.hpp"
#include "horofano/sweep.hpp"
