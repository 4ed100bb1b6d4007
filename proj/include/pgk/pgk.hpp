#pragma once
#include "detect.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "kernels.hpp"
#include "matching.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "recognizers.hpp"
#include "reductions.hpp"
#include "repsets.hpp"
#include "search.hpp"
#include "setsystem.hpp"
#include "sunflower.hpp"
