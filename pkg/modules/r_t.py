# -*- coding: utf-8 -*-
"""
Table of the growth rates of the minimum and maximum of g_k
"""


from utils import charcount
from utils import display


def rate_table_analysis(dic):
    """
    Rate analysis using parameters stored in the dic
    """
    kmax = dic["kmax_rate"]

    rates = charcount.rate_table(kmax)

    display.display_rate_table(rates)
    return 0
