# bperf: b-coloring and b-perfection toolkit
