# -*- coding: utf-8 -*-
"""
Solve a convex character programming instance read from a JSON file
"""


import logging

from utils import apps
from utils import display
from utils import newick_data

logger = logging.getLogger(__name__)


def solve_instance_analysis(dic):
    """
    Solve analysis using parameters stored in the dic
    """
    instance_file = dic["instance_file_solve"]
    workers = dic["workers_solve"]

    instance = apps.SolveInstance.from_json(newick_data.read_instance_file(instance_file))
    logger.info('solving %s on %d tree(s) of %d taxa', instance.mode, len(instance.trees), instance.trees[0].n)

    result = apps.solve_instance(instance, workers=workers)

    display.display_json(result.to_json())
    return 0
