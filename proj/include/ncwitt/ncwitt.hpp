#ifndef NCWITT_NCWITT_HPP
#define NCWITT_NCWITT_HPP

#include <ncwitt/cd_witt.hpp>
#include <ncwitt/cycquot.hpp>
#include <ncwitt/errors.hpp>
#include <ncwitt/f2.hpp>
#include <ncwitt/freealg.hpp>
#include <ncwitt/parse.hpp>
#include <ncwitt/rmap.hpp>
#include <ncwitt/sampling.hpp>
#include <ncwitt/verify.hpp>
#include <ncwitt/witt_ghost.hpp>

#endif
