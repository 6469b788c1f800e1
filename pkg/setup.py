#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Data   : 2026/10/17 18:40

# 本地安装： pip install -e .
# 打包： python setup.py sdist bdist_wheel

from setuptools import setup, find_packages
import io

VERSION = '0.1.0'

with io.open("README.md", encoding='utf-8') as f:
    long_description = f.read()

install_requires = open("requirements.txt").readlines()

setup(
    name="pyxlpta",  # pip 安装时用的名字
    version=VERSION,
    description="Parikh树自动机：成员判定、线性PTAR判空、GPTA交换引理、两计数器机编码",
    long_description=long_description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=('tests', 'tests.*')),
    package_data={'pyxlpta.automata': ['fixtures/*']},
    include_package_data=True,
    license='Apache License',
    classifiers=[],
    python_requires='>=3.8',
    install_requires=install_requires,
    entry_points={'console_scripts': ['pyxlpta = pyxlpta.tools.cli:main']},
)
