"""Статичные рисунки (SVG)"""
