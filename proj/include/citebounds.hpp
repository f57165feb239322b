#pragma once

#include "citebounds/audit.hpp"
#include "citebounds/bounds.hpp"
#include "citebounds/enumerate.hpp"
#include "citebounds/error.hpp"
#include "citebounds/generator.hpp"
#include "citebounds/indices.hpp"
#include "citebounds/profile.hpp"
#include "citebounds/profile_io.hpp"
#include "citebounds/rational.hpp"
#include "citebounds/reconstruct.hpp"
#include "citebounds/serialize.hpp"
#include "citebounds/tables.hpp"
