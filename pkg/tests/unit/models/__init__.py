# -*- coding: utf-8 -*-