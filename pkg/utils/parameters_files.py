# -*- coding: utf-8 -*-
"""
Define two functions for save and upload parameter dictionnary
"""


import logging
import os
import pickle

from utils.errors import ParameterFileError

logger = logging.getLogger(__name__)


def split_param_path(path, file_extension='.PARAM'):
    """
    (directory, filename, extension) of a parameter file path; the extension
    defaults to .PARAM when the path has none
    """
    directory, base = os.path.split(path)
    filename, extension = os.path.splitext(base)
    if not filename:
        raise ParameterFileError(f'no file name in parameter path {path!r}')
    return directory or '.', filename, extension or file_extension


def save_param_file(dic, directory, filename, file_extension='.PARAM'):
    """
    Save a parameter dictionnary in a file
    """
    name = os.path.join(directory, filename + file_extension)
    try:
        with open(name, 'wb') as file:
            pickle.Pickler(file).dump(dic)
    except OSError as err:
        raise ParameterFileError(f'cannot save parameters to {name}: {err.strerror}') from None
    logger.info('parameters saved to %s', name)
    return name


def upload_param_file(directory, filename, file_extension='.PARAM'):
    """
    Upload parameter dictionnary
    """
    name = os.path.join(directory, filename + file_extension)
    try:
        with open(name, 'rb') as file:
            dic = pickle.Unpickler(file).load()
    except FileNotFoundError:
        raise ParameterFileError(f'parameter file not found: {name}') from None
    except (OSError, pickle.UnpicklingError, EOFError) as err:
        raise ParameterFileError(f'cannot load parameters from {name}: {err}') from None
    if not isinstance(dic, dict):
        raise ParameterFileError(f'{name} does not hold a parameter dictionnary')
    logger.info('parameters uploaded from %s', name)
    return dic
