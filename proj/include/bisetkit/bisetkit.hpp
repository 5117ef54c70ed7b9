#pragma once

#include "bisetkit/acceptance.hpp"
#include "bisetkit/biset.hpp"
#include "bisetkit/catalog.hpp"
#include "bisetkit/characters.hpp"
#include "bisetkit/cyclotomic.hpp"
#include "bisetkit/dress.hpp"
#include "bisetkit/error.hpp"
#include "bisetkit/green.hpp"
#include "bisetkit/group.hpp"
#include "bisetkit/homs.hpp"
#include "bisetkit/json_io.hpp"
#include "bisetkit/linalg.hpp"
#include "bisetkit/rational.hpp"
#include "bisetkit/subgroups.hpp"
